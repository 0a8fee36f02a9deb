"""
Bound commands: bound-eval and lemma-cos.
"""

import logging
from typing import List

from src.cli.options import common_parser, float_list
from src.schemas.config import RunConfig
from src.schemas.reports import BoundProfile, CosSumCheck
from src.services.bounds import bound_profile, cos_sum_table
from src.utils.exceptions import InvalidInputError

logger = logging.getLogger(__name__)


def bound_eval_command(args, config: RunConfig) -> List[BoundProfile]:
    if args.k is not None and 2 * args.k != len(args.shifts):
        raise InvalidInputError(
            f"--k {args.k} needs {2 * args.k} shifts (got {len(args.shifts)})", field="k"
        )
    return [bound_profile(args.q, args.shifts, args.k, args.eps, args.V)]


def lemma_cos_command(args, config: RunConfig) -> List[CosSumCheck]:
    return cos_sum_table(args.z, args.a)


def register(subparsers) -> None:
    parser = subparsers.add_parser(
        "bound-eval", parents=[common_parser()],
        help="evaluate W, A, pair kernels and the moment and large-value bounds (JSON)",
    )
    parser.add_argument("--q", type=int, required=True, help="modulus >= 17")
    parser.add_argument("--shifts", type=float_list, required=True, help="t1,...,t2k")
    parser.add_argument("--k", type=int, default=None, help="half the number of shifts")
    parser.add_argument("--V", type=float, default=None, help="large-value level")
    parser.add_argument("--eps", type=float, default=None, help="bound exponent knob")
    parser.set_defaults(handler=bound_eval_command)

    parser = subparsers.add_parser(
        "lemma-cos", parents=[common_parser()],
        help="sum_{p <= z} cos(a log p)/p against its main term",
    )
    parser.add_argument("--z", type=float, required=True, help="prime cut-off >= 3")
    parser.add_argument("--a", type=float_list, required=True, help="frequencies a1,a2,...")
    parser.set_defaults(handler=lemma_cos_command)


__all__ = ["register"]
