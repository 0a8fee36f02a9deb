"""
General utility helper functions.
"""

import math
from typing import Iterable, List, Sequence, Tuple
from datetime import datetime, timezone

import numpy as np


def parse_float_list(text: str) -> List[float]:
    """
    Parse a comma-separated list of reals.

    Args:
        text: e.g. "0,0.5,-1e-3"

    Returns:
        List of floats
    """
    if text is None or not str(text).strip():
        return []
    values = []
    for item in str(text).split(","):
        item = item.strip()
        if not item:
            continue
        values.append(float(item))
    return values


def parse_prime_range(text: str) -> Tuple[int, int]:
    """
    Parse an inclusive "A:B" range.

    Args:
        text: Range text

    Returns:
        (A, B)
    """
    parts = str(text).split(":")
    if len(parts) != 2:
        raise ValueError(f"expected A:B, got {text!r}")
    return int(parts[0]), int(parts[1])


def linear_grid(vmin: float, vmax: float, steps: int) -> List[float]:
    """
    Ascending grid of `steps` points from vmin to vmax inclusive.

    Args:
        vmin: First point
        vmax: Last point
        steps: Number of points (>= 1)

    Returns:
        List of floats
    """
    if steps == 1:
        return [float(vmin)]
    return [float(v) for v in np.linspace(vmin, vmax, steps)]


def log_plus(t: float) -> float:
    """log+ |t| = max(log |t|, 0)"""
    t = abs(t)
    return math.log(t) if t > 1.0 else 0.0


def format_number(value) -> str:
    """
    Deterministic text form for report cells.

    Floats use the shortest round-trip repr, bools lower-case, sequences are
    joined with ';'.
    """
    if isinstance(value, bool):
        return "true" if value else "false"
    if isinstance(value, (float, np.floating)):
        return repr(float(value))
    if isinstance(value, (int, np.integer)):
        return str(int(value))
    if isinstance(value, (list, tuple)):
        return ";".join(format_number(v) for v in value)
    if value is None:
        return ""
    return str(value)


def format_exponents(exponents: Sequence[int]) -> str:
    """Render a character exponent tuple, e.g. (1, 0) -> '1;0'"""
    return ";".join(str(int(e)) for e in exponents) if len(exponents) else "-"


def utc_timestamp() -> str:
    """Current UTC time in ISO format"""
    return datetime.now(timezone.utc).isoformat()


__all__ = [
    "parse_float_list",
    "parse_prime_range",
    "linear_grid",
    "log_plus",
    "format_number",
    "format_exponents",
    "utc_timestamp",
]
