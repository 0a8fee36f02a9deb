"""
Random-model command.
"""

import logging
from typing import List

from src.cli.options import common_parser, prime_range
from src.schemas.config import RunConfig
from src.schemas.reports import ModelMomentEstimate
from src.services.numtheory import primes_in_range
from src.services.randmodel import model_moment, model_scan
from src.utils.exceptions import InvalidInputError
from src.utils.validators import validate_prime_range

logger = logging.getLogger(__name__)


def rand_model_command(args, config: RunConfig) -> List[ModelMomentEstimate]:
    if (args.q is None) == (args.prime_range is None):
        raise InvalidInputError("give exactly one of --q and --prime-range", field="q")

    if args.q is not None:
        return [model_moment(args.q, args.k, args.samples, config.seed, config.tol,
                             args.eta, config.workers)]

    start, stop = args.prime_range
    is_valid, error = validate_prime_range(start, stop)
    if not is_valid:
        raise InvalidInputError(error, field="prime_range")
    return model_scan(primes_in_range(start, stop), args.k, args.samples, config.seed,
                      config.tol, args.eta, config.workers)


def register(subparsers) -> None:
    parser = subparsers.add_parser(
        "rand-model", parents=[common_parser()],
        help="Monte-Carlo moments of the Steinhaus model of theta(1, chi)",
    )
    parser.add_argument("--q", type=int, default=None, help="modulus")
    parser.add_argument("--prime-range", dest="prime_range", type=prime_range, default=None,
                        help="scan every prime in A:B instead of one modulus")
    parser.add_argument("--k", type=int, default=1)
    parser.add_argument("--samples", type=int, default=10000)
    parser.add_argument("--eta", type=int, choices=[0, 1], default=0)
    parser.set_defaults(handler=rand_model_command)


__all__ = ["register"]
