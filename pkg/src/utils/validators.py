"""
Custom validators for command-line input.
"""

import math
from typing import Optional, Sequence

from src.config.constants import MAX_SHIFT_HEIGHT


def validate_shifts(shifts: Sequence[float]) -> tuple[bool, Optional[str]]:
    """
    Validate a shift list t_1, ..., t_2k.

    Args:
        shifts: Shift values

    Returns:
        Tuple of (is_valid, error_message)
    """
    if not shifts:
        return False, "at least two shifts are required"

    if len(shifts) % 2:
        return False, f"the number of shifts must be even (got {len(shifts)})"

    if any(not math.isfinite(t) for t in shifts):
        return False, "shifts must be finite"

    if max(abs(t) for t in shifts) > MAX_SHIFT_HEIGHT:
        return False, f"shifts must satisfy |t| <= {MAX_SHIFT_HEIGHT:g}"

    return True, None


def validate_prime_range(start: int, stop: int) -> tuple[bool, Optional[str]]:
    """
    Validate an inclusive range of moduli for a scan.

    Args:
        start: First modulus
        stop: Last modulus

    Returns:
        Tuple of (is_valid, error_message)
    """
    if start < 3:
        return False, f"range start must be >= 3 (got {start})"

    if stop < start:
        return False, f"range end ({stop}) must be >= range start ({start})"

    return True, None


def validate_grid(vmin: float, vmax: float, steps: int) -> tuple[bool, Optional[str]]:
    """
    Validate a V-grid (vmin, vmax, steps).

    Returns:
        Tuple of (is_valid, error_message)
    """
    if steps < 1:
        return False, f"vsteps must be >= 1 (got {steps})"

    if vmax < vmin:
        return False, f"vmax ({vmax}) must be >= vmin ({vmin})"

    return True, None


__all__ = [
    "validate_shifts",
    "validate_prime_range",
    "validate_grid",
]
