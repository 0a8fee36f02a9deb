"""
Controlled-error special functions.

Hurwitz zeta by Euler-Maclaurin summation and complex log-Gamma by Stirling's
series after a recurrence shift. Every value carries an absolute error bound.
"""

import logging
import math
from dataclasses import dataclass
from typing import Tuple, Union

import numpy as np
from scipy.special import bernoulli

from src.config.constants import (
    EULER_MACLAURIN_MIN_SHIFT,
    EULER_MACLAURIN_ORDER,
    EULER_MACLAURIN_MAX_ORDER,
    EULER_MACLAURIN_MAX_SHIFT,
    STIRLING_MIN_REAL,
    STIRLING_ORDER,
)
from src.config.settings import settings
from src.utils.exceptions import DomainError, PoleError, PrecisionError
from src.utils.summation import compensated_sum

logger = logging.getLogger(__name__)

EPS = float(np.finfo(np.float64).eps)
LOG_2PI = math.log(2.0 * math.pi)

# B_0 .. B_32; only even indices are used
_BERNOULLI = bernoulli(2 * EULER_MACLAURIN_MAX_ORDER + 2)


# ==================== TYPES ====================

@dataclass(frozen=True)
class ComplexApprox:
    """Complex value with a rigorous absolute error bound."""

    value: complex
    abs_error: float

    def __post_init__(self):
        object.__setattr__(self, "value", complex(self.value))
        object.__setattr__(self, "abs_error", float(self.abs_error))
        if not math.isfinite(self.abs_error) or self.abs_error < 0:
            raise ValueError(f"abs_error must be finite and >= 0 (got {self.abs_error})")

    @staticmethod
    def _coerce(other) -> "ComplexApprox":
        if isinstance(other, ComplexApprox):
            return other
        return ComplexApprox(complex(other), 0.0)

    def __add__(self, other):
        other = self._coerce(other)
        return ComplexApprox(self.value + other.value, self.abs_error + other.abs_error)

    __radd__ = __add__

    def __neg__(self):
        return ComplexApprox(-self.value, self.abs_error)

    def __sub__(self, other):
        return self + (-self._coerce(other))

    def __rsub__(self, other):
        return self._coerce(other) - self

    def __mul__(self, other):
        other = self._coerce(other)
        err = (abs(self.value) * other.abs_error + abs(other.value) * self.abs_error
               + self.abs_error * other.abs_error)
        return ComplexApprox(self.value * other.value, err)

    __rmul__ = __mul__

    def __truediv__(self, scalar):
        if isinstance(scalar, ComplexApprox):
            raise TypeError("division by an approximate value is not supported")
        return self.scale(1.0 / complex(scalar))

    def __abs__(self) -> float:
        return abs(self.value)

    def scale(self, c) -> "ComplexApprox":
        return ComplexApprox(complex(c) * self.value, abs(c) * self.abs_error)

    def conjugate(self) -> "ComplexApprox":
        return ComplexApprox(self.value.conjugate(), self.abs_error)

    def exp(self) -> "ComplexApprox":
        """exp of an approximate value: |e^(v+d) - e^v| <= |e^v| (e^|d| - 1)"""
        out = complex(np.exp(self.value))
        return ComplexApprox(out, abs(out) * math.expm1(self.abs_error))

    @property
    def real(self) -> float:
        return self.value.real

    @property
    def imag(self) -> float:
        return self.value.imag

    def contains(self, z, slack: float = 0.0) -> bool:
        return abs(complex(z) - self.value) <= self.abs_error + slack


@dataclass(frozen=True)
class EulerMaclaurinConfig:
    """Direct-sum length N and Bernoulli correction order M."""

    shift: int
    order: int
    target_tol: float

    def __post_init__(self):
        if self.shift < 1:
            raise ValueError(f"shift must be >= 1 (got {self.shift})")
        if not 1 <= self.order <= EULER_MACLAURIN_MAX_ORDER:
            raise ValueError(f"order must be in [1, {EULER_MACLAURIN_MAX_ORDER}] (got {self.order})")
        if self.target_tol <= 0:
            raise ValueError("target_tol must be > 0")


# ==================== HURWITZ ZETA ====================

def _log_em_remainder(s: complex, x, order: int):
    """
    log of the Euler-Maclaurin remainder bound

        4 |(s)_{2M}| / (2 pi)^{2M} * x^{1 - sigma - 2M} / (sigma + 2M - 1)

    with x = N + a.
    """
    sigma = s.real
    log_poch = sum(math.log(abs(s + k)) for k in range(2 * order))
    return (math.log(4.0) + log_poch - 2 * order * LOG_2PI
            + (1.0 - sigma - 2 * order) * np.log(x) - math.log(sigma + 2 * order - 1))


def euler_maclaurin_config(s: complex, a_min: float, tol: float) -> EulerMaclaurinConfig:
    """
    Choose N >= max(ceil|s|, 10) and M (10, escalating to 15) so the
    remainder bound at the smallest shift a_min is <= tol / 2.

    Args:
        s: Complex argument
        a_min: Smallest Hurwitz parameter in the batch
        tol: Absolute tolerance

    Returns:
        EulerMaclaurinConfig
    """
    s = complex(s)
    floor = max(math.ceil(abs(s)), EULER_MACLAURIN_MIN_SHIFT)
    target = math.log(tol / 2.0)

    for order in range(EULER_MACLAURIN_ORDER, EULER_MACLAURIN_MAX_ORDER + 1):
        shift = floor
        while shift <= EULER_MACLAURIN_MAX_SHIFT:
            if _log_em_remainder(s, shift + a_min, order) <= target:
                if order > EULER_MACLAURIN_ORDER:
                    logger.debug(f"Euler-Maclaurin order escalated to {order} for s={s}")
                return EulerMaclaurinConfig(shift=shift, order=order, target_tol=tol)
            shift = math.ceil(shift * 1.25) + 1

    raise PrecisionError(f"no Euler-Maclaurin parameters reach tol={tol:g} at s={s}")


def hurwitz_zeta_vector(
    s: complex,
    a,
    tol: float = None,
    regularized: bool = False,
) -> Tuple[np.ndarray, np.ndarray]:
    """
    zeta(s, a) for a vector of shifts, sharing one Euler-Maclaurin setup.

    With regularized=True the value is zeta(s, a) - 1/(s - 1), which is
    finite at s = 1 where it equals -digamma(a).

    Args:
        s: Complex argument with Re s > 0
        a: Shifts in (0, 1]
        tol: Target bound for the truncation remainder
        regularized: Subtract the pole part

    Returns:
        (values, abs_errors); errors include a rounding estimate and may
        exceed tol, callers check their own budget
    """
    tol = settings.DEFAULT_TOL if tol is None else tol
    s = complex(s)
    a = np.atleast_1d(np.asarray(a, dtype=np.float64))

    if tol <= 0:
        raise DomainError(f"tol must be > 0 (got {tol})", constraint="tol > 0")
    if s.real <= 0:
        raise DomainError(f"hurwitz_zeta requires Re s > 0 (got {s})", constraint="Re s > 0")
    if a.size == 0:
        return np.zeros(0, dtype=np.complex128), np.zeros(0)
    if np.any(a <= 0) or np.any(a > 1):
        raise DomainError("hurwitz_zeta requires a in (0, 1]", constraint="0 < a <= 1")
    if s == 1 and not regularized:
        raise PoleError("zeta(s, a) has a pole at s = 1")

    cfg = euler_maclaurin_config(s, float(a.min()), tol)
    shift, order = cfg.shift, cfg.order

    log_base = np.log(np.arange(shift, dtype=np.float64)[:, None] + a[None, :])
    direct = compensated_sum(np.exp(-s * log_base), axis=0)
    magnitude = np.exp(-s.real * log_base).sum(axis=0)

    x = shift + a
    log_x = np.log(x)
    x_pow = np.exp(-s * log_x)
    u = 1.0 - s
    if regularized:
        tail = -log_x if u == 0 else np.expm1(u * log_x) / (-u)
    else:
        tail = np.exp(u * log_x) / (s - 1.0)
    half = 0.5 * x_pow

    correction = np.zeros_like(x_pow)
    poch = s
    for j in range(1, order + 1):
        coef = _BERNOULLI[2 * j] / math.factorial(2 * j)
        correction = correction + coef * poch * x_pow * np.exp((1 - 2 * j) * log_x)
        poch *= (s + 2 * j - 1) * (s + 2 * j)

    values = direct + tail + half + correction

    remainder = np.exp(_log_em_remainder(s, x, order))
    phase_scale = np.maximum(log_x, np.abs(np.log(a)))
    rounding = EPS * (8.0 + abs(s) * phase_scale) * (
        magnitude + np.abs(tail) + np.abs(half) + np.abs(correction)
    )
    return values, remainder + rounding


def hurwitz_zeta(s: complex, a: float, tol: float = None) -> ComplexApprox:
    """
    Hurwitz zeta function zeta(s, a) = sum_{n>=0} (n + a)^(-s).

    Args:
        s: Complex, Re s > 0, s != 1
        a: Real in (0, 1]
        tol: Absolute tolerance (default: settings.DEFAULT_TOL)

    Returns:
        ComplexApprox with abs_error <= tol
    """
    tol = settings.DEFAULT_TOL if tol is None else tol
    values, errors = hurwitz_zeta_vector(s, [a], tol)
    result = ComplexApprox(values[0], errors[0])
    if result.abs_error > tol:
        raise PrecisionError(
            f"zeta({s}, {a}) reached error {result.abs_error:.3g} > tol {tol:g}",
            best_effort=result,
            achieved=result.abs_error,
        )
    return result


# ==================== LOG GAMMA ====================

def log_gamma_vector(s) -> Tuple[np.ndarray, np.ndarray]:
    """
    Principal-branch log Gamma on Re s > 0 (vectorised).

    The argument is shifted to Re z >= 10 with
    log Gamma(s) = log Gamma(s + m) - sum_{k<m} log(s + k),
    then Stirling's series with 10 Bernoulli terms is applied.

    Returns:
        (values, abs_errors)
    """
    s = np.atleast_1d(np.asarray(s, dtype=np.complex128))
    if np.any(s.real <= 0):
        raise DomainError("log_gamma requires Re s > 0", constraint="Re s > 0")

    shift = np.maximum(0, np.ceil(STIRLING_MIN_REAL - s.real)).astype(np.int64)
    z = s + shift

    recurrence = np.zeros_like(s)
    recurrence_mag = np.zeros(s.shape)
    for k in range(int(shift.max(initial=0))):
        mask = k < shift
        term = np.log(s[mask] + k)
        recurrence[mask] += term
        recurrence_mag[mask] += np.abs(term)

    log_z = np.log(z)
    values = (z - 0.5) * log_z - z + 0.5 * LOG_2PI
    z_inv = 1.0 / z
    z_inv2 = z_inv * z_inv
    power = z_inv
    for j in range(1, STIRLING_ORDER + 1):
        values = values + _BERNOULLI[2 * j] / (2 * j * (2 * j - 1)) * power
        power = power * z_inv2
    values = values - recurrence

    m = STIRLING_ORDER + 1
    abs_z = np.abs(z)
    sec = 1.0 / np.cos(np.angle(z) / 2.0)
    remainder = abs(_BERNOULLI[2 * m]) / (2 * m * (2 * m - 1)) * abs_z ** (1 - 2 * m) * sec ** (2 * m)
    rounding = 4.0 * EPS * (np.abs((z - 0.5) * log_z) + abs_z + recurrence_mag + 4.0)
    return values, remainder + rounding


def log_gamma(s: complex) -> ComplexApprox:
    """
    Principal-branch log Gamma(s) for Re s > 0.

    Args:
        s: Complex argument

    Returns:
        ComplexApprox
    """
    s = complex(s)
    if s.real <= 0:
        raise DomainError(f"log_gamma requires Re s > 0 (got {s})", constraint="Re s > 0")
    values, errors = log_gamma_vector([s])
    return ComplexApprox(values[0], errors[0])


def gamma(s: complex) -> ComplexApprox:
    """Gamma(s) = exp(log_gamma(s))"""
    return log_gamma(s).exp()


def abs_gamma(s: Union[complex, np.ndarray]) -> np.ndarray:
    """|Gamma(s)| on Re s > 0 (vectorised)"""
    values, _ = log_gamma_vector(s)
    return np.exp(values.real)


__all__ = [
    "ComplexApprox",
    "EulerMaclaurinConfig",
    "euler_maclaurin_config",
    "hurwitz_zeta_vector",
    "hurwitz_zeta",
    "log_gamma_vector",
    "log_gamma",
    "gamma",
    "abs_gamma",
]
