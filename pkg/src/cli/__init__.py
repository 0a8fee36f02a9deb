"""
CLI package initialization.

argparse application setup, command registration and the exit-code contract:
0 on success, 2 on usage or domain errors, 1 on computation errors.
"""

import argparse
import logging
import sys
from typing import List, Optional, Sequence

from src.cli.commands import register_commands
from src.cli.config_loader import load_config
from src.cli.lifespan import lifespan
from src.cli.options import command_params, config_overrides
from src.config.constants import EXIT_CODES
from src.config.settings import settings
from src.services.report_service import report_service
from src.utils.exceptions import ThetaMomentsError, to_exit_code

logger = logging.getLogger(__name__)


def create_parser() -> argparse.ArgumentParser:
    """
    Create the top-level parser with all subcommands.

    Returns:
        Configured ArgumentParser
    """
    parser = argparse.ArgumentParser(
        prog=settings.APP_NAME,
        description="Moments of Dirichlet L-functions and theta functions: "
                    "exact computation, bounds and random-model simulation",
    )
    parser.add_argument("--version", action="version", version=f"%(prog)s {settings.VERSION}")
    subparsers = parser.add_subparsers(dest="command", metavar="COMMAND")
    subparsers.required = True
    register_commands(subparsers)
    return parser


def _report_error(exc: ThetaMomentsError) -> None:
    sys.stderr.write(f"error: {exc.message}\n")
    constraint = exc.details.get("constraint")
    if constraint:
        sys.stderr.write(f"constraint: {constraint}\n")


def run(argv: Optional[Sequence[str]] = None) -> int:
    """
    Parse argv, run the subcommand and write its report.

    Args:
        argv: Arguments without the program name (default: sys.argv[1:])

    Returns:
        Process exit code
    """
    argv: List[str] = list(sys.argv[1:] if argv is None else argv)
    parser = create_parser()
    try:
        args = parser.parse_args(argv)
    except SystemExit as e:
        # --help/--version exit 0, argparse errors exit 2
        return e.code if isinstance(e.code, int) else EXIT_CODES["SUCCESS"]

    try:
        config = load_config(args.config, config_overrides(args), command_params(args))
        with lifespan(args.command, config, args.log_level):
            reports = args.handler(args, config)
            report_service.write(args.command, reports, config, argv)
    except ThetaMomentsError as e:
        _report_error(e)
        return to_exit_code(e)
    except Exception as e:
        logger.exception(f"Unexpected failure in {args.command}")
        sys.stderr.write(f"error: {e}\n")
        return EXIT_CODES["COMPUTATION_ERROR"]

    return EXIT_CODES["SUCCESS"]


def main() -> None:
    sys.exit(run())


__all__ = ["create_parser", "run", "main"]
