"""
Theta commands: theta-moment, theta-scan, mellin-check.
"""

import logging
from typing import List

from src.cli.options import PARITY_CHOICES, common_parser, prime_range
from src.schemas.config import RunConfig
from src.schemas.reports import MellinCheckResult, MomentReport
from src.services.theta import (
    FAST,
    NAIVE,
    mellin_check_all,
    ratio_trend,
    theta_moment,
    theta_scan,
)
from src.utils.exceptions import InvalidInputError
from src.utils.logger import log_with_context
from src.utils.validators import validate_prime_range

logger = logging.getLogger(__name__)


def _eps(args, config: RunConfig) -> float:
    return config.tol if args.eps is None else args.eps


def theta_moment_command(args, config: RunConfig) -> List[MomentReport]:
    return [theta_moment(args.q, args.k, args.parity, _eps(args, config), args.method)]


def theta_scan_command(args, config: RunConfig) -> List[MomentReport]:
    start, stop = args.prime_range
    is_valid, error = validate_prime_range(start, stop)
    if not is_valid:
        raise InvalidInputError(error, field="prime_range")

    reports = theta_scan(start, stop, args.k, args.parity, _eps(args, config), config.workers)
    if any(not r.empty_family for r in reports):
        trend = ratio_trend(reports)
        log_with_context(logger, "INFO", "Ratio trend", **trend.model_dump())
    return reports


def mellin_check_command(args, config: RunConfig) -> List[MellinCheckResult]:
    indices = None if args.character is None else [args.character]
    results = mellin_check_all(args.q, args.height, args.step, _eps(args, config),
                               config.workers, indices=indices)
    worst = max((r.residual for r in results), default=0.0)
    logger.info(f"Mellin check q={args.q}: {len(results)} characters, max residual {worst:.3e}")
    return results


def _moment_options(parser) -> None:
    parser.add_argument("--k", type=int, default=1, help="moment order (default 1)")
    parser.add_argument("--parity", choices=PARITY_CHOICES, default="even")
    parser.add_argument("--eps", type=float, default=None, help="error target per theta value")


def register(subparsers) -> None:
    parser = subparsers.add_parser(
        "theta-moment", parents=[common_parser()],
        help="2k-th moment of theta(1, chi) over even or odd primitive characters",
    )
    parser.add_argument("--q", type=int, required=True, help="modulus >= 3")
    _moment_options(parser)
    parser.add_argument("--method", choices=[FAST, NAIVE], default=FAST)
    parser.set_defaults(handler=theta_moment_command)

    parser = subparsers.add_parser(
        "theta-scan", parents=[common_parser()],
        help="theta moments for every prime modulus in A:B",
    )
    parser.add_argument("--prime-range", dest="prime_range", type=prime_range, required=True,
                        help="inclusive range A:B")
    _moment_options(parser)
    parser.set_defaults(handler=theta_scan_command)

    parser = subparsers.add_parser(
        "mellin-check", parents=[common_parser()],
        help="compare theta(1, chi) with its Mellin integral for even primitive characters",
    )
    parser.add_argument("--q", type=int, required=True, help="modulus")
    parser.add_argument("--height", type=float, default=None,
                        help="truncation height H (chosen from the Gamma tail when omitted)")
    parser.add_argument("--step", type=float, default=None,
                        help="trapezoid step h (refined from 1/64 when omitted)")
    parser.add_argument("--character", type=int, default=None, help="single character index")
    parser.add_argument("--eps", type=float, default=None, help="error target")
    parser.set_defaults(handler=mellin_check_command)


__all__ = ["register"]
