"""
CLI commands package initialization.

Register all command modules.
"""

from . import bounds, characters, lfunc, randmodel, theta

COMMAND_MODULES = [characters, theta, lfunc, bounds, randmodel]


def register_commands(subparsers) -> None:
    """Add every subcommand to an argparse subparsers action"""
    for module in COMMAND_MODULES:
        module.register(subparsers)


__all__ = ["register_commands", "COMMAND_MODULES"]
