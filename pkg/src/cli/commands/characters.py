"""
Character table command.
"""

import logging
from typing import List

from src.cli.options import common_parser
from src.schemas.config import RunConfig
from src.schemas.reports import CharacterRow
from src.services.characters import build_group
from src.utils.helpers import format_exponents

logger = logging.getLogger(__name__)


def char_table(args, config: RunConfig) -> List[CharacterRow]:
    """One row per character mod q: index, exponents, parity, conductor, primitivity"""
    group = build_group(args.q)
    logger.info(f"Character group mod {args.q}: {group.counts()}")
    return [
        CharacterRow(
            index=chi.index,
            exponents=format_exponents(chi.exponents),
            parity="even" if chi.is_even else "odd",
            conductor=chi.conductor,
            primitive=chi.is_primitive,
        )
        for chi in group
    ]


def register(subparsers) -> None:
    parser = subparsers.add_parser(
        "char-table", parents=[common_parser()],
        help="list the Dirichlet characters mod q",
    )
    parser.add_argument("--q", type=int, required=True, help="modulus")
    parser.set_defaults(handler=char_table)


__all__ = ["register", "char_table"]
