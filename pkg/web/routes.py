from flask import Blueprint, jsonify, request

import config
from yangian import jobs, storage
from yangian.codec import dumps

routes_bp = Blueprint('routes', __name__)

WEB_COMMANDS = [c for c in jobs.COMMANDS if c != 'validate']

STATUS_CODES = {
    config.EXIT_OK: 200,
    config.EXIT_DOMAIN_ERROR: 400,
    config.EXIT_MISMATCH: 200,
    config.EXIT_CAP_REFUSED: 413,
}


@routes_bp.route('/')
def index():
    """Available commands, limits and recent validation runs"""
    return jsonify({
        'commands': WEB_COMMANDS,
        'dimension_cap': config.WEB_MAX_DIMENSION,
        'recent_runs': storage.get_validation_runs(limit=5),
    })


@routes_bp.route('/api/<command>', methods=['POST'])
def run_command(command):
    """Run one job with the JSON request body as payload"""
    if command not in WEB_COMMANDS:
        return jsonify({'status': 'error', 'error': f"unknown command '{command}'"}), 404

    payload = request.get_json(silent=True)
    if payload is None:
        return jsonify({'status': 'error', 'error': 'request body must be JSON'}), 400

    code, doc = jobs.run_command(command, payload, cap=config.WEB_MAX_DIMENSION)
    return dumps(doc), STATUS_CODES.get(code, 500), {'Content-Type': 'application/json'}
