"""
Command-line front end.

    python -m yangian criterion < factors.json
    python -m yangian validate grids/n2_pairs.json --output report.json --workers 4

Every command except ``validate`` reads one JSON payload from standard input
and writes one JSON document to standard output.
"""

import argparse
import json
import logging
import sys
from typing import List, Optional

import config
from yangian import jobs
from yangian.codec import dumps

logger = logging.getLogger(__name__)


def build_parser() -> argparse.ArgumentParser:
    parser = argparse.ArgumentParser(
        prog='yangian',
        description="Irreducibility of tensor products of Yangian evaluation modules",
    )
    parser.add_argument('command', choices=jobs.COMMANDS)
    parser.add_argument('grid', nargs='?', help="grid spec file (validate only)")
    parser.add_argument('--cap', type=int, default=None,
                        help=f"largest tensor dimension the oracle builds (default {config.DIMENSION_CAP})")
    parser.add_argument('--workers', type=int, default=None,
                        help="worker processes for validate (default: available CPUs)")
    parser.add_argument('--output', default=None,
                        help=f"report file for validate (default {config.DEFAULT_REPORT_FILE})")
    parser.add_argument('--log-level', default=config.LOG_LEVEL)
    return parser


def _read_payload(args) -> object:
    if args.command == 'validate':
        if not args.grid:
            raise ValueError("validate needs a grid spec file")
        with open(args.grid, 'r', encoding='utf-8') as f:
            return json.load(f)
    return json.load(sys.stdin)


def main(argv: Optional[List[str]] = None) -> int:
    parser = build_parser()
    args = parser.parse_args(argv)
    logging.basicConfig(level=args.log_level.upper(), format=config.LOG_FORMAT, stream=sys.stderr)

    try:
        payload = _read_payload(args)
    except (OSError, ValueError) as e:
        print(f"error: could not read {args.command} input: {e}", file=sys.stderr)
        return config.EXIT_DOMAIN_ERROR

    code, doc = jobs.run_command(args.command, payload, cap=args.cap, workers=args.workers, output=args.output)
    if doc.get('status') == 'error':
        print(f"error: {doc['error']}", file=sys.stderr)
    print(dumps(doc))
    return code


if __name__ == '__main__':
    sys.exit(main())
