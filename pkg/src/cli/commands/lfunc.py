"""
L-function commands: l-moment, shifted-moment, large-values, majorant-check, prime-moment.
"""

import logging
from typing import List

from src.cli.options import FAMILY_CHOICES, common_parser, float_list
from src.config.constants import MAJORANT_LAMBDA, MAJORANT_SLACK, CharacterFamily
from src.schemas.config import RunConfig
from src.schemas.reports import LargeValueHistogram, MajorantRow, MomentReport, PrimeMomentCheck
from src.services.lfunc import (
    central_moment,
    large_value_counts,
    majorant_diagnostic,
    prime_moment_check,
    shifted_moment,
)
from src.utils.exceptions import InvalidInputError
from src.utils.helpers import linear_grid
from src.utils.validators import validate_grid, validate_shifts

logger = logging.getLogger(__name__)


def _checked_shifts(shifts: List[float]) -> List[float]:
    is_valid, error = validate_shifts(shifts)
    if not is_valid:
        raise InvalidInputError(error, field="shifts")
    return shifts


def l_moment_command(args, config: RunConfig) -> List[MomentReport]:
    return [central_moment(args.q, args.k, config.tol, CharacterFamily(args.family), config.workers)]


def shifted_moment_command(args, config: RunConfig) -> List[MomentReport]:
    shifts = _checked_shifts(args.shifts)
    return [shifted_moment(args.q, shifts, config.tol, CharacterFamily(args.family),
                           args.epsilon, config.workers)]


def large_values_command(args, config: RunConfig) -> List[LargeValueHistogram]:
    shifts = _checked_shifts(args.shifts)
    is_valid, error = validate_grid(args.vmin, args.vmax, args.vsteps)
    if not is_valid:
        raise InvalidInputError(error, field="vsteps")
    v_grid = linear_grid(args.vmin, args.vmax, args.vsteps)
    return [large_value_counts(args.q, shifts, v_grid, config.tol,
                               CharacterFamily(args.family), config.workers)]


def majorant_check_command(args, config: RunConfig) -> List[MajorantRow]:
    rows = majorant_diagnostic(
        args.q,
        shifts=args.shifts,
        x=args.x,
        lam=args.lam,
        slack=args.slack,
        primes_only=not args.prime_powers,
        tol=config.tol,
        family=CharacterFamily(args.family),
        workers=config.workers,
    )
    violations = sum(r.violation for r in rows)
    if violations:
        logger.warning(f"{violations} of {len(rows)} rows exceed the majorant plus slack")
    return rows


def prime_moment_command(args, config: RunConfig) -> List[PrimeMomentCheck]:
    return [prime_moment_check(args.q, args.x, args.k, args.t)]


def register(subparsers) -> None:
    parser = subparsers.add_parser(
        "l-moment", parents=[common_parser()],
        help="2k-th moment of L(1/2, chi) over a character family",
    )
    parser.add_argument("--q", type=int, required=True, help="modulus >= 3")
    parser.add_argument("--k", type=int, default=1, help="moment order (default 1)")
    parser.add_argument("--family", choices=FAMILY_CHOICES, default=CharacterFamily.STAR.value)
    parser.set_defaults(handler=l_moment_command)

    parser = subparsers.add_parser(
        "shifted-moment", parents=[common_parser()],
        help="sum of prod |L(1/2 + i t_j, chi)| against the shifted-moment bound",
    )
    parser.add_argument("--q", type=int, required=True, help="modulus >= 3")
    parser.add_argument("--shifts", type=float_list, required=True, help="t1,...,t2k")
    parser.add_argument("--family", choices=FAMILY_CHOICES, default=CharacterFamily.STAR.value)
    parser.add_argument("--epsilon", type=float, default=None, help="bound exponent knob")
    parser.set_defaults(handler=shifted_moment_command)

    parser = subparsers.add_parser(
        "large-values", parents=[common_parser()],
        help="counts of characters with sum log|L| >= V on a V grid",
    )
    parser.add_argument("--q", type=int, required=True, help="modulus >= 3")
    parser.add_argument("--shifts", type=float_list, required=True, help="t1,...,t2k")
    parser.add_argument("--vmin", type=float, required=True)
    parser.add_argument("--vmax", type=float, required=True)
    parser.add_argument("--vsteps", type=int, default=20)
    parser.add_argument("--family", choices=FAMILY_CHOICES,
                        default=CharacterFamily.NONQUADRATIC.value)
    parser.set_defaults(handler=large_values_command)

    parser = subparsers.add_parser(
        "majorant-check", parents=[common_parser()],
        help="log|L(1/2 + it, chi)| against the conditional majorant",
    )
    parser.add_argument("--q", type=int, required=True, help="modulus >= 3")
    parser.add_argument("--shifts", type=float_list, default=[0.0], help="heights t1,...")
    parser.add_argument("--lam", type=float, default=MAJORANT_LAMBDA)
    parser.add_argument("--x", type=float, default=None, help="prime cut-off (default (log q)^2)")
    parser.add_argument("--slack", type=float, default=MAJORANT_SLACK)
    parser.add_argument("--prime-powers", dest="prime_powers", action="store_true",
                        help="include prime squares and higher powers")
    parser.add_argument("--family", choices=FAMILY_CHOICES,
                        default=CharacterFamily.NONQUADRATIC.value)
    parser.set_defaults(handler=majorant_check_command)

    parser = subparsers.add_parser(
        "prime-moment", parents=[common_parser()],
        help="moment of a prime Dirichlet polynomial against its mean-value bound",
    )
    parser.add_argument("--q", type=int, required=True, help="modulus")
    parser.add_argument("--x", type=float, required=True, help="prime cut-off, x^k < q")
    parser.add_argument("--k", type=int, required=True)
    parser.add_argument("--t", type=float, default=0.0)
    parser.set_defaults(handler=prime_moment_command)


__all__ = ["register"]
