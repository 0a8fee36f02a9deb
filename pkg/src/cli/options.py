"""
Shared argparse options and argument types.
"""

import argparse
from typing import Any, Dict, List, Tuple

from src.config.constants import CONFIG_FILE_KEYS, CharacterFamily, Parity
from src.utils.helpers import parse_float_list, parse_prime_range

# Destinations owned by the common options; everything else is a command parameter.
COMMON_DESTS = ("config", "log_level", *CONFIG_FILE_KEYS)
INTERNAL_DESTS = ("command", "handler")

FAMILY_CHOICES = [f.value for f in CharacterFamily]
PARITY_CHOICES = [p.value for p in Parity]


def float_list(text: str) -> List[float]:
    """argparse type for 't1,t2,...'"""
    try:
        values = parse_float_list(text)
    except ValueError:
        raise argparse.ArgumentTypeError(f"expected comma-separated reals, got {text!r}")
    if not values:
        raise argparse.ArgumentTypeError("expected at least one value")
    return values


def prime_range(text: str) -> Tuple[int, int]:
    """argparse type for 'A:B'"""
    try:
        return parse_prime_range(text)
    except ValueError:
        raise argparse.ArgumentTypeError(f"expected A:B, got {text!r}")


def common_parser() -> argparse.ArgumentParser:
    """Parent parser with the run-configuration flags every subcommand accepts"""
    parser = argparse.ArgumentParser(add_help=False)
    group = parser.add_argument_group("run configuration")
    group.add_argument("--config", default=None, help="key=value config file")
    group.add_argument("--tol", type=float, default=None, help="absolute tolerance")
    group.add_argument("--workers", type=int, default=None,
                       help="worker processes (overrides the WORKERS environment variable)")
    group.add_argument("--output-dir", dest="output_dir", default=None, help="report directory")
    group.add_argument("--format", choices=["csv", "json"], default=None, help="report format")
    group.add_argument("--seed", type=int, default=None, help="random-model seed")
    group.add_argument("--log-level", dest="log_level", default=None,
                       choices=["DEBUG", "INFO", "WARNING", "ERROR", "CRITICAL"])
    return parser


def config_overrides(args: argparse.Namespace) -> Dict[str, Any]:
    return {key: getattr(args, key, None) for key in CONFIG_FILE_KEYS}


def command_params(args: argparse.Namespace) -> Dict[str, Any]:
    """Command parameters recorded in the config snapshot"""
    return {
        key: value
        for key, value in sorted(vars(args).items())
        if key not in COMMON_DESTS and key not in INTERNAL_DESTS
    }


__all__ = [
    "COMMON_DESTS",
    "FAMILY_CHOICES",
    "PARITY_CHOICES",
    "float_list",
    "prime_range",
    "common_parser",
    "config_overrides",
    "command_params",
]
