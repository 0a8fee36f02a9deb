"""
Fixed constants for thetamoments.
Character families, bound regimes, numeric thresholds, report layouts.
"""

from typing import Dict, List, Tuple
from enum import Enum


# ==================== CHARACTERS ====================

class Parity(str, Enum):
    """Character parity (chi(-1) = +1 / -1)"""
    EVEN = "even"
    ODD = "odd"


class CharacterFamily(str, Enum):
    """Character families a moment or count can be summed over"""
    STAR = "star"                                # primitive characters
    EVEN_PRIMITIVE_NONTRIVIAL = "even-primitive-nontrivial"
    ODD_PRIMITIVE = "odd-primitive"
    NONQUADRATIC = "nonquadratic"                # all chi mod q with chi^2 != chi_0
    STAR_NONQUADRATIC = "star-nonquadratic"      # primitive and chi^2 != chi_0


PARITY_FAMILY: Dict[str, str] = {
    "even": CharacterFamily.EVEN_PRIMITIVE_NONTRIVIAL.value,
    "odd": CharacterFamily.ODD_PRIMITIVE.value,
}


# ==================== BOUNDS ====================

class Regime(str, Enum):
    """Large-value bound regimes"""
    I = "I"
    II = "II"
    III = "III"


CLOSE_PAIR_THRESHOLD: float = 0.01
MIN_MODULUS_F_TERM: int = 17
MIN_MODULUS_E_TERM: int = 16
REGIME_III_CONSTANT: int = 801
REGIME_SLOPE_NUMERATOR: int = 18
REGIME_SLOPE_DENOMINATOR: int = 5
WEAK_BOUND_V_MIN: float = 3.0
WEAK_BOUND_W_FACTOR: float = 200.0


# ==================== L-FUNCTIONS ====================

MAX_SHIFT_HEIGHT: float = 50.0
LOG_ABS_CLAMP: float = -50.0
MAJORANT_LAMBDA: float = 0.6
MAJORANT_SLACK: float = 10.0
LAMBDA0_BRACKET: Tuple[float, float] = (0.5, 0.6)


# ==================== SPECIAL FUNCTIONS ====================

EULER_MACLAURIN_MIN_SHIFT: int = 10
EULER_MACLAURIN_ORDER: int = 10
EULER_MACLAURIN_MAX_ORDER: int = 15
EULER_MACLAURIN_MAX_SHIFT: int = 1 << 16
STIRLING_MIN_REAL: float = 10.0
STIRLING_ORDER: int = 10


# ==================== THETA ====================

MIN_THETA_MODULUS: int = 3
MELLIN_DEFAULT_HEIGHT: float = 10.0
MELLIN_DEFAULT_STEP: float = 1.0 / 64.0
MELLIN_HEIGHT_INCREMENT: float = 0.5
MELLIN_MAX_HEIGHT: float = 40.0
MELLIN_MIN_STEP: float = 1.0 / 1024.0


# ==================== RANDOM MODEL ====================

MIN_MODEL_SAMPLES: int = 100
MEDIAN_OF_MEANS_GROUPS: int = 10
RNG_ALGORITHM: str = "PCG64"


# ==================== EXIT CODES ====================

EXIT_CODES: Dict[str, int] = {
    "SUCCESS": 0,
    "COMPUTATION_ERROR": 1,
    "USAGE_ERROR": 2,
}

# ==================== REPORTS ====================

SUBCOMMANDS: List[str] = [
    "char-table",
    "theta-moment",
    "theta-scan",
    "l-moment",
    "shifted-moment",
    "large-values",
    "mellin-check",
    "bound-eval",
    "lemma-cos",
    "rand-model",
    "majorant-check",
    "prime-moment",
]

CSV_COLUMNS: Dict[str, List[str]] = {
    "char-table": ["index", "exponents", "parity", "conductor", "primitive"],
    "theta-moment": ["q", "k", "parity", "raw", "normalization", "ratio", "eps", "family_size"],
    "theta-scan": ["q", "k", "parity", "raw", "normalization", "ratio", "eps", "family_size"],
    "l-moment": ["q", "k", "family", "raw", "normalization", "ratio", "eps", "family_size"],
    "shifted-moment": [
        "q", "k", "family", "shifts", "raw", "bound", "bound_ratio", "eps", "family_size",
    ],
    "large-values": ["V", "count"],
    "mellin-check": [
        "q", "character", "series_real", "series_imag", "quadrature_real",
        "quadrature_imag", "residual", "height", "step", "tail_bound",
    ],
    "lemma-cos": ["a", "lhs", "rhs", "margin"],
    "rand-model": [
        "q", "k", "samples", "seed", "estimate", "standard_error",
        "median_of_means", "normalized", "exact_second_moment",
    ],
    "majorant-check": ["q", "character", "t", "log_abs_l", "majorant", "margin", "violation"],
    "prime-moment": ["q", "x", "k", "t", "lhs", "rhs", "ratio"],
}

JSON_ONLY_COMMANDS: List[str] = ["bound-eval"]

# Config keys that never change a numeric result; left out of the CSV header.
NON_RESULT_CONFIG_KEYS: List[str] = ["workers", "output_dir", "format"]

CONFIG_FILE_KEYS: List[str] = ["tol", "workers", "output_dir", "format", "seed"]


# ==================== HELPER FUNCTIONS ====================

def is_close_pair(ti: float, tj: float) -> bool:
    """Check whether two shifts count as a close pair"""
    return abs(ti - tj) <= CLOSE_PAIR_THRESHOLD


def family_for_parity(parity: str) -> str:
    """Get the primitive character family for a parity"""
    return PARITY_FAMILY[Parity(parity).value]


# ==================== EXPORT ====================

__all__ = [
    # Enums
    "Parity",
    "CharacterFamily",
    "Regime",
    # Dicts
    "PARITY_FAMILY",
    "EXIT_CODES",
    "CSV_COLUMNS",
    # Lists
    "SUBCOMMANDS",
    "JSON_ONLY_COMMANDS",
    "NON_RESULT_CONFIG_KEYS",
    "CONFIG_FILE_KEYS",
    # Constants
    "CLOSE_PAIR_THRESHOLD",
    "MIN_MODULUS_F_TERM",
    "MIN_MODULUS_E_TERM",
    "REGIME_III_CONSTANT",
    "REGIME_SLOPE_NUMERATOR",
    "REGIME_SLOPE_DENOMINATOR",
    "WEAK_BOUND_V_MIN",
    "WEAK_BOUND_W_FACTOR",
    "MAX_SHIFT_HEIGHT",
    "LOG_ABS_CLAMP",
    "MAJORANT_LAMBDA",
    "MAJORANT_SLACK",
    "LAMBDA0_BRACKET",
    "EULER_MACLAURIN_MIN_SHIFT",
    "EULER_MACLAURIN_ORDER",
    "EULER_MACLAURIN_MAX_ORDER",
    "EULER_MACLAURIN_MAX_SHIFT",
    "STIRLING_MIN_REAL",
    "STIRLING_ORDER",
    "MIN_THETA_MODULUS",
    "MELLIN_DEFAULT_HEIGHT",
    "MELLIN_DEFAULT_STEP",
    "MELLIN_HEIGHT_INCREMENT",
    "MELLIN_MAX_HEIGHT",
    "MELLIN_MIN_STEP",
    "MIN_MODEL_SAMPLES",
    "MEDIAN_OF_MEANS_GROUPS",
    "RNG_ALGORITHM",
    # Helper Functions
    "is_close_pair",
    "family_for_parity",
]
