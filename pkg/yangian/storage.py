import json
import logging
import os
import threading
import time
import uuid
from datetime import datetime
from typing import Dict, List, Optional

import config
from yangian.harness import has_failures

logger = logging.getLogger(__name__)

# Global lock for file operations
file_lock = threading.Lock()


def load_json(filepath: str) -> Dict:
    """Load JSON file, return empty structure if not exists"""
    with file_lock:
        if not os.path.exists(filepath):
            return {}
        try:
            with open(filepath, 'r', encoding='utf-8') as f:
                return json.load(f)
        except (OSError, ValueError) as e:
            logger.error("Error loading %s: %s", filepath, e)
            return {}


def save_json(filepath: str, data: Dict) -> bool:
    """Save data to JSON file with atomic write and thread locking"""
    directory = os.path.dirname(filepath)
    if directory:
        os.makedirs(directory, exist_ok=True)

    with file_lock:
        max_retries = 3
        for attempt in range(max_retries):
            temp_file = f"{filepath}.{uuid.uuid4()}.tmp"
            try:
                with open(temp_file, 'w', encoding='utf-8') as f:
                    json.dump(data, f, indent=2, ensure_ascii=False)
                os.replace(temp_file, filepath)
                return True
            except OSError as e:
                if os.path.exists(temp_file):
                    try:
                        os.remove(temp_file)
                    except OSError:
                        pass
                if attempt == max_retries - 1:
                    logger.error("Error saving %s: %s", filepath, e)
                else:
                    time.sleep(0.1)
    return False


# Validation run records

def create_validation_run(grid: Dict) -> Dict:
    """New run record in 'running' state"""
    return {
        'id': str(uuid.uuid4()),
        'grid': grid,
        'status': 'running',
        'started_at': datetime.now().isoformat(),
        'completed_at': None,
    }


def complete_validation_run(run: Dict, report: Dict, report_file: Optional[str] = None) -> Dict:
    """
    Close the run, write the report file and append the run to the run log.

    A report that cannot be written leaves the run in 'error' status.
    """
    summary = report.get('summary', {})
    run.update({
        'status': 'mismatch' if has_failures(summary) else 'success',
        'completed_at': datetime.now().isoformat(),
        'cases': summary.get('cases', 0),
        'mismatches': summary.get('mismatches', 0),
        'errors': summary.get('errors', 0),
        'report_file': report_file or config.DEFAULT_REPORT_FILE,
    })
    if not save_json(run['report_file'], dict(report, run_id=run['id'])):
        run['status'] = 'error'
        run['error'] = f"could not write report file {run['report_file']}"

    data = load_json(config.RUNS_FILE)
    data.setdefault('runs', []).append({k: v for k, v in run.items() if k != 'grid'})
    if not save_json(config.RUNS_FILE, data):
        logger.warning("validation run %s missing from %s", run['id'], config.RUNS_FILE)
    return run


def get_validation_runs(limit: int = 20) -> List[Dict]:
    """Most recent runs first"""
    runs = load_json(config.RUNS_FILE).get('runs', [])
    return sorted(runs, key=lambda r: r.get('started_at', ''), reverse=True)[:limit]
