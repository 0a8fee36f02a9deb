"""
Configuration module for thetamoments.
"""

from .settings import settings, Settings, get_settings, reload_settings
from .constants import (
    # Enums
    Parity,
    CharacterFamily,
    Regime,
    # Dicts
    EXIT_CODES,
    CSV_COLUMNS,
    # Lists
    SUBCOMMANDS,
    JSON_ONLY_COMMANDS,
    CONFIG_FILE_KEYS,
    # Constants
    CLOSE_PAIR_THRESHOLD,
    MAX_SHIFT_HEIGHT,
    LOG_ABS_CLAMP,
    MAJORANT_LAMBDA,
    MIN_THETA_MODULUS,
    RNG_ALGORITHM,
    # Helper Functions
    is_close_pair,
    family_for_parity,
)

__all__ = [
    # Settings
    "settings",
    "Settings",
    "get_settings",
    "reload_settings",
    # Enums
    "Parity",
    "CharacterFamily",
    "Regime",
    # Dicts
    "EXIT_CODES",
    "CSV_COLUMNS",
    # Lists
    "SUBCOMMANDS",
    "JSON_ONLY_COMMANDS",
    "CONFIG_FILE_KEYS",
    # Constants
    "CLOSE_PAIR_THRESHOLD",
    "MAX_SHIFT_HEIGHT",
    "LOG_ABS_CLAMP",
    "MAJORANT_LAMBDA",
    "MIN_THETA_MODULUS",
    "RNG_ALGORITHM",
    # Helper Functions
    "is_close_pair",
    "family_for_parity",
]
