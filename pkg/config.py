import os

# Oracle settings
DIMENSION_CAP = 1000  # largest tensor dimension the oracle will build
DEFAULT_WORKERS = os.cpu_count() or 1

# Storage
DATA_DIR = "data"
REPORTS_DIR = os.path.join(DATA_DIR, "reports")
DEFAULT_REPORT_FILE = os.path.join(REPORTS_DIR, "validation_report.json")
RUNS_FILE = os.path.join(DATA_DIR, "validation_runs.json")

# Logging
LOG_LEVEL = os.environ.get("YANGIAN_LOG_LEVEL", "WARNING")
LOG_FORMAT = "%(asctime)s %(levelname)s %(name)s: %(message)s"

# Exit codes
EXIT_OK = 0
EXIT_DOMAIN_ERROR = 1
EXIT_MISMATCH = 2
EXIT_CAP_REFUSED = 3

# Wire format
RATIONAL_MINUS = ("-", "−")

# Web
SECRET_KEY = os.environ.get("YANGIAN_SECRET_KEY", "dev-secret-key")
WEB_HOST = "0.0.0.0"
WEB_PORT = 5000
WEB_DEBUG = False
WEB_MAX_DIMENSION = 256  # oracle cap for HTTP requests
