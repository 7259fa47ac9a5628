import logging
import os

from flask import Flask

import config
from web.routes import routes_bp

app = Flask(__name__)
app.config.from_object(config)
app.secret_key = config.SECRET_KEY

# Create required directories
for directory in [config.DATA_DIR, config.REPORTS_DIR]:
    os.makedirs(directory, exist_ok=True)

# Register blueprints
app.register_blueprint(routes_bp)

if __name__ == '__main__':
    logging.basicConfig(level=config.LOG_LEVEL, format=config.LOG_FORMAT)
    print("\n" + "=" * 60)
    print("Yangian Irreducibility Service Starting...")
    print("=" * 60)
    print(f"Oracle dimension cap (web): {config.WEB_MAX_DIMENSION}")
    print(f"Reports directory: {config.REPORTS_DIR}")
    print("=" * 60)
    print(f"\n POST JSON payloads to: http://localhost:{config.WEB_PORT}/api/<command>")
    print("\n")

    app.run(host=config.WEB_HOST, port=config.WEB_PORT, debug=config.WEB_DEBUG, use_reloader=False)
