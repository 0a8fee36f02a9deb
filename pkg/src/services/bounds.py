"""
Explicit bound formulas for shifted moments and large-value counts.

All implied constants are taken to be 1; reports compare empirical values
against these shapes as ratios.
"""

import logging
import math
from itertools import combinations
from typing import List, Optional, Sequence

import numpy as np

from src.config.constants import (
    CLOSE_PAIR_THRESHOLD,
    MIN_MODULUS_E_TERM,
    MIN_MODULUS_F_TERM,
    REGIME_III_CONSTANT,
    REGIME_SLOPE_DENOMINATOR,
    REGIME_SLOPE_NUMERATOR,
    WEAK_BOUND_V_MIN,
    WEAK_BOUND_W_FACTOR,
    Regime,
    is_close_pair,
)
from src.config.settings import settings
from src.schemas.reports import BoundProfile, CosSumCheck, PairTerm, RegimeBound
from src.services.numtheory import PrimeTable, cached_sieve, euler_phi
from src.utils.exceptions import DomainError
from src.utils.helpers import log_plus
from src.utils.summation import compensated_sum

logger = logging.getLogger(__name__)


def _check_modulus(q: int, minimum: int, what: str) -> None:
    if q < minimum:
        raise DomainError(f"{what} requires q >= {minimum} (got {q})", constraint=f"q >= {minimum}")


def _shift_values(shifts) -> List[float]:
    values = getattr(shifts, "shifts", shifts)
    return sorted(float(t) for t in values)


# ==================== PAIR KERNELS ====================

def f_term(ti: float, tj: float, q: int) -> float:
    """
    Pair kernel F: log(min(1/|ti - tj|, log q)) for close pairs (|ti - tj| <= 1/100,
    coincident shifts giving log log q) and log log log q otherwise.

    Args:
        ti, tj: Shifts
        q: Modulus >= 17

    Returns:
        F value
    """
    _check_modulus(q, MIN_MODULUS_F_TERM, "f_term")
    delta = abs(ti - tj)
    log_q = math.log(q)
    if is_close_pair(ti, tj):
        return math.log(log_q) if delta == 0 else math.log(min(1.0 / delta, log_q))
    return math.log(math.log(log_q))


def e_term(ti: float, tj: float, q: int) -> float:
    """
    Pair kernel E: min(1/|ti - tj|, log q)^(1/2) for close pairs, sqrt(log log q) otherwise.
    """
    _check_modulus(q, MIN_MODULUS_E_TERM, "e_term")
    delta = abs(ti - tj)
    log_q = math.log(q)
    if is_close_pair(ti, tj):
        return math.sqrt(log_q if delta == 0 else min(1.0 / delta, log_q))
    return math.sqrt(math.log(log_q))


# ==================== W AND A ====================

def w_quantity(shifts, q: int, k: Optional[int] = None) -> float:
    """
    W = 2k log log q + 2 sum_{i<j} F(t_i, t_j).

    Args:
        shifts: ShiftTuple or sequence of 2k reals
        q: Modulus >= 17
        k: Half the number of shifts (default: len(shifts) / 2)

    Returns:
        W
    """
    _check_modulus(q, MIN_MODULUS_F_TERM, "w_quantity")
    values = _shift_values(shifts)
    k = len(values) // 2 if k is None else k
    pair_sum = sum(f_term(ti, tj, q) for ti, tj in combinations(values, 2))
    return 2 * k * math.log(math.log(q)) + 2 * pair_sum


def a_quantity(V: float, W: float, k: int) -> float:
    """
    Piecewise A: (log W)/2 for V <= W, W log W / (2V) up to V = W log W / (4k),
    and 2k beyond. Continuous at both knots.
    """
    if V <= 0:
        raise DomainError(f"a_quantity requires V > 0 (got {V})", constraint="V > 0")
    if W <= math.e:
        raise DomainError(f"a_quantity requires W > e (got {W})", constraint="W > e")

    log_w = math.log(W)
    if V <= W:
        return log_w / 2
    if V <= W * log_w / (4 * k):
        return W * log_w / (2 * V)
    return 2.0 * k


# ==================== LARGE VALUES ====================

def regime_for(V: float, W: float, k: int) -> Regime:
    if V <= W:
        return Regime.I
    if V < W * math.log(W) / (4 * k):
        return Regime.II
    return Regime.III


def large_value_bound(q: int, V: float, W: float, k: int) -> RegimeBound:
    """
    Three-regime upper shape for N_t(q, V).

        I   (4 sqrt(loglog q) <= V <= W):  phi(q) V/sqrt(W) exp(-(V^2/W)(1 - 18k/(5 log W))^2)
        II  (W < V < W log W / (4k)):      phi(q) V/sqrt(W) exp(-(V^2/W)(1 - 18kV/(5 W log W))^2)
        III (above):                        phi(q) exp(-(V/(801k)) log V)

    Args:
        q: Modulus
        V: Level
        W: Value of w_quantity
        k: Moment order

    Returns:
        RegimeBound
    """
    floor = 4.0 * math.sqrt(math.log(math.log(q))) if q >= 16 else float("inf")
    if not V >= floor:
        raise DomainError(
            f"large_value_bound requires V >= 4 sqrt(log log q) = {floor:.6g} (got {V})",
            constraint="V >= 4 sqrt(log log q)",
        )
    if W <= 1:
        raise DomainError(f"large_value_bound requires W > 1 (got {W})", constraint="W > 1")

    regime = regime_for(V, W, k)
    return RegimeBound(V=V, regime=regime, value=regime_value(regime, q, V, W, k))


def regime_value(regime: Regime, q: int, V: float, W: float, k: int) -> float:
    """Evaluate one regime's expression regardless of where V falls"""
    phi = euler_phi(q)
    slope = REGIME_SLOPE_NUMERATOR * k / REGIME_SLOPE_DENOMINATOR
    log_w = math.log(W)

    regime = Regime(regime)
    if regime is Regime.I:
        factor = 1.0 - slope / log_w
    elif regime is Regime.II:
        factor = 1.0 - slope * V / (W * log_w)
    else:
        return phi * math.exp(-(V / (REGIME_III_CONSTANT * k)) * math.log(V))
    return phi * V / math.sqrt(W) * math.exp(-(V * V / W) * factor * factor)


def weak_large_value_bound(q: int, V: float, W: float) -> float:
    """
    Weakened large-value shape used to integrate the moment:
    phi(q) exp(-V^2/W) for 3 <= V <= 200 W, phi(q) exp(-2V) beyond.
    """
    if V < WEAK_BOUND_V_MIN:
        raise DomainError(f"weak bound requires V >= {WEAK_BOUND_V_MIN:g} (got {V})",
                          constraint="V >= 3")
    phi = euler_phi(q)
    if V <= WEAK_BOUND_W_FACTOR * W:
        return phi * math.exp(-V * V / W)
    return phi * math.exp(-2.0 * V)


def moment_shape(q: int, W: float) -> float:
    """phi(q) e^(W/4), the moment bound obtained by integrating the weak shape"""
    return euler_phi(q) * math.exp(W / 4.0)


# ==================== MOMENT BOUNDS ====================

def shifted_moment_bound(q: int, shifts, k: Optional[int] = None, epsilon: Optional[float] = None) -> float:
    """
    phi(q) (log q)^(k/2 + eps) prod_{i<j} E(t_i, t_j).

    Args:
        q: Modulus >= 16
        shifts: ShiftTuple or sequence of 2k reals
        k: Half the number of shifts (default: len(shifts) / 2)
        epsilon: Exponent knob (default: settings.BOUND_EPSILON)

    Returns:
        Bound value
    """
    _check_modulus(q, MIN_MODULUS_E_TERM, "shifted_moment_bound")
    values = _shift_values(shifts)
    k = len(values) // 2 if k is None else k
    epsilon = settings.BOUND_EPSILON if epsilon is None else epsilon

    log_product = sum(math.log(e_term(ti, tj, q)) for ti, tj in combinations(values, 2))
    return euler_phi(q) * math.log(q) ** (k / 2 + epsilon) * math.exp(log_product)


def max_value_shape(q: int, t: float, c: float = 1.0) -> float:
    """exp(c (log q + log+ t) / log log q), the conditional shape of max |L(1/2 + it, chi)|"""
    _check_modulus(q, MIN_MODULUS_E_TERM, "max_value_shape")
    return math.exp(c * (math.log(q) + log_plus(t)) / math.log(math.log(q)))


def bound_profile(
    q: int,
    shifts,
    k: Optional[int] = None,
    epsilon: Optional[float] = None,
    V: Optional[float] = None,
) -> BoundProfile:
    """
    Every bound quantity for (q, shifts, k), plus A and the regime bound when V is given.

    Returns:
        BoundProfile
    """
    _check_modulus(q, MIN_MODULUS_F_TERM, "bound_profile")
    values = _shift_values(shifts)
    k = len(values) // 2 if k is None else k
    epsilon = settings.BOUND_EPSILON if epsilon is None else epsilon

    pairs = [
        PairTerm(
            i=i,
            j=j,
            delta=abs(values[i] - values[j]),
            close=is_close_pair(values[i], values[j]),
            f=f_term(values[i], values[j], q),
            e=e_term(values[i], values[j], q),
        )
        for i, j in combinations(range(len(values)), 2)
    ]
    log_log_q = math.log(math.log(q))
    W = 2 * k * log_log_q + 2 * sum(p.f for p in pairs)

    a_value = regime = None
    if V is not None:
        a_value = a_quantity(V, W, k)
        regime = large_value_bound(q, V, W, k)

    profile = BoundProfile(
        q=q,
        k=k,
        shifts=values,
        epsilon=epsilon,
        W=W,
        log_log_q=log_log_q,
        pairs=pairs,
        moment_bound=shifted_moment_bound(q, values, k, epsilon),
        max_value_shape=max_value_shape(q, max((abs(t) for t in values), default=0.0)),
        A=a_value,
        regime=regime,
    )
    logger.debug(f"Bound profile q={q} k={k}: W={W:.6g}")
    return profile


# ==================== PRIME COSINE SUM ====================

def cos_sum_check(z: float, a: float, table: Optional[PrimeTable] = None) -> CosSumCheck:
    """
    sum_{p <= z} cos(a log p) / p against its main term:
    log(min(1/|a|, log z)) when |a| <= 1/100 (a = 0 giving log log z),
    log log(2 + |a|) otherwise.

    Args:
        z: Prime cut-off >= 3
        a: Frequency
        table: Prime table covering z (sieved on demand otherwise)

    Returns:
        CosSumCheck with margin = lhs - rhs
    """
    if z < 3:
        raise DomainError(f"cos_sum_check requires z >= 3 (got {z})", constraint="z >= 3")

    if table is None or table.limit < z:
        table = cached_sieve(int(z))
    primes = table.primes_up_to(z).astype(np.float64)
    lhs = compensated_sum(np.cos(a * np.log(primes)) / primes)

    if abs(a) <= CLOSE_PAIR_THRESHOLD:
        log_z = math.log(z)
        rhs = math.log(log_z if a == 0 else min(1.0 / abs(a), log_z))
        regime = "close"
    else:
        rhs = math.log(math.log(2.0 + abs(a)))
        regime = "far"

    return CosSumCheck(z=float(z), a=float(a), lhs=lhs, rhs=rhs, margin=lhs - rhs, regime=regime)


def cos_sum_table(z: float, frequencies: Sequence[float]) -> List[CosSumCheck]:
    """cos_sum_check for several frequencies sharing one sieve"""
    table = cached_sieve(int(z))
    return [cos_sum_check(z, a, table) for a in frequencies]


__all__ = [
    "f_term",
    "e_term",
    "w_quantity",
    "a_quantity",
    "regime_for",
    "large_value_bound",
    "regime_value",
    "weak_large_value_bound",
    "moment_shape",
    "shifted_moment_bound",
    "max_value_shape",
    "bound_profile",
    "cos_sum_check",
    "cos_sum_table",
]
