"""
Meixner Asymptotics - command line
Exact, asymptotic and comparison runs for Meixner polynomials
"""

import argparse
from typing import List, Optional

import structlog
from pydantic import ValidationError

from src import __version__
from src.cli.commands import compare, evaluate, regions, turning_points, verify
from src.utils.config import settings
from src.utils.errors import MeixnerError
from src.utils.logging import configure_logging

logger = structlog.get_logger()

EXIT_OK = 0
EXIT_BAD_ARGS = 2


def build_parser() -> argparse.ArgumentParser:
    parser = argparse.ArgumentParser(
        prog="meixner",
        description="Global asymptotics of Meixner polynomials against an extended-precision oracle",
    )
    parser.add_argument("--version", action="version", version=f"%(prog)s {__version__}")
    subparsers = parser.add_subparsers(dest="command", required=True)
    for module in (evaluate, compare, verify, regions, turning_points):
        module.register(subparsers)
    return parser


def main(argv: Optional[List[str]] = None) -> int:
    """Run one subcommand and return its exit code"""
    parser = build_parser()
    try:
        args = parser.parse_args(argv)
    except SystemExit as e:
        return e.code if isinstance(e.code, int) else EXIT_BAD_ARGS

    configure_logging(args.log_level or settings.LOG_LEVEL, settings.LOG_FORMAT)
    logger.debug("command_started", command=args.command)

    try:
        return args.handler(args)
    except ValidationError as e:
        logger.error("invalid_parameters", command=args.command, errors=e.error_count(), detail=str(e))
        return EXIT_BAD_ARGS
    except MeixnerError as e:
        logger.error("command_failed", command=args.command, error=str(e),
                     error_type=type(e).__name__, exit_code=e.exit_code)
        return e.exit_code
    except ValueError as e:
        logger.error("invalid_parameters", command=args.command, error=str(e))
        return EXIT_BAD_ARGS
