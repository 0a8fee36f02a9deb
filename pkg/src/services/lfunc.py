"""
Dirichlet L-values on the critical line and the aggregates built on them:
central and shifted moments, large-value counts and the GRH majorant.

L(s, chi) = q^(-s) sum_{a=1}^{q} chi(a) zeta(s, a/q). The Hurwitz vector is
shared by every character, so the all-character path is one zeta vector plus
one group transform per s-point.
"""

import logging
import math
from dataclasses import dataclass, field
from functools import lru_cache, partial
from typing import List, Optional, Sequence, Tuple

import numpy as np
from scipy.optimize import bisect

from src.config.constants import (
    CharacterFamily,
    LAMBDA0_BRACKET,
    LOG_ABS_CLAMP,
    MAJORANT_LAMBDA,
    MAJORANT_SLACK,
    MAX_SHIFT_HEIGHT,
    MIN_MODULUS_E_TERM,
    MIN_THETA_MODULUS,
    is_close_pair,
)
from src.config.settings import settings
from src.schemas.reports import LargeValueHistogram, MajorantRow, MomentReport, PrimeMomentCheck
from src.services.bounds import shifted_moment_bound
from src.services.characters import Character, CharacterGroup, build_group, roots_of_unity
from src.services.numtheory import cached_sieve, euler_phi
from src.services.specfun import EPS, ComplexApprox, hurwitz_zeta_vector
from src.services.transforms import group_transform
from src.utils.exceptions import DomainError, PoleError, PrecisionError
from src.utils.helpers import log_plus
from src.utils.logger import log_with_context
from src.utils.parallel import parallel_map
from src.utils.summation import chunked_sum, compensated_sum

logger = logging.getLogger(__name__)

FAST = "fast"
NAIVE = "naive"


# ==================== TYPES ====================

@dataclass(frozen=True)
class ShiftTuple:
    """2k real shifts, sorted on construction"""

    shifts: Tuple[float, ...]

    def __post_init__(self):
        values = tuple(sorted(float(t) for t in self.shifts))
        if not values or len(values) % 2:
            raise DomainError(
                f"a shift tuple needs an even, nonzero number of shifts (got {len(values)})",
                constraint="len(shifts) = 2k, k >= 1",
            )
        if not all(math.isfinite(t) for t in values):
            raise DomainError("shifts must be finite", constraint="finite shifts")
        object.__setattr__(self, "shifts", values)

    @classmethod
    def of(cls, values) -> "ShiftTuple":
        if isinstance(values, ShiftTuple):
            return values
        return cls(tuple(values))

    @property
    def k(self) -> int:
        return len(self.shifts) // 2

    @property
    def max_height(self) -> float:
        return max(abs(t) for t in self.shifts)

    def pairs(self) -> List[Tuple[int, int, float, bool]]:
        """(i, j, |t_i - t_j|, close) for i < j"""
        out = []
        for i in range(len(self.shifts)):
            for j in range(i + 1, len(self.shifts)):
                ti, tj = self.shifts[i], self.shifts[j]
                out.append((i, j, abs(ti - tj), is_close_pair(ti, tj)))
        return out

    def negated(self) -> "ShiftTuple":
        return ShiftTuple(tuple(-t for t in self.shifts))

    def __len__(self) -> int:
        return len(self.shifts)


@dataclass(frozen=True, eq=False)
class LValueGrid:
    """L-values for selected characters (rows) at s-points (columns)"""

    q: int
    s_points: Tuple[complex, ...]
    character_indices: np.ndarray
    values: np.ndarray = field(repr=False)
    errors: np.ndarray = field(repr=False)

    def value(self, row: int, col: int = 0) -> ComplexApprox:
        return ComplexApprox(self.values[row, col], self.errors[row, col])

    def row_of(self, index: int) -> int:
        rows = np.nonzero(self.character_indices == index)[0]
        if not len(rows):
            raise DomainError(f"character {index} not in grid")
        return int(rows[0])

    def column(self, col: int = 0) -> List[ComplexApprox]:
        return [self.value(r, col) for r in range(len(self.character_indices))]


# ==================== L-VALUES ====================

def _residue_zeta(q: int, s: complex, tol: float) -> Tuple[np.ndarray, np.ndarray]:
    """zeta(s, a/q) stored at residue a mod q for a = 1..q (regularised at s = 1)"""
    shifts = np.arange(1, q + 1, dtype=np.float64) / q
    values, errors = hurwitz_zeta_vector(s, shifts, tol / q, regularized=(s == 1))
    return np.roll(values, 1), np.roll(errors, 1)


def _combined_error(q: int, s: complex, zeta: np.ndarray, errors: np.ndarray,
                    units: np.ndarray, rounding_factor: float) -> float:
    scale = q ** (-s.real)
    return scale * (float(errors[units].sum()) + rounding_factor * EPS * float(np.abs(zeta[units]).sum()))


def l_value(chi: Character, s: complex, tol: Optional[float] = None) -> ComplexApprox:
    """
    L(s, chi) by Hurwitz decomposition.

    Args:
        chi: Dirichlet character
        s: Complex argument with Re s > 0
        tol: Absolute tolerance (default: settings.DEFAULT_TOL)

    Returns:
        ComplexApprox

    Raises:
        PoleError: s = 1 with chi trivial
        PrecisionError: combined error above tol (best effort attached)
    """
    tol = settings.DEFAULT_TOL if tol is None else tol
    s = complex(s)
    q = chi.q
    if s == 1 and chi.is_trivial:
        raise PoleError("L(s, chi_0) has a pole at s = 1")

    zeta, errors = _residue_zeta(q, s, tol)
    units = chi.group.structure.units
    chi_values = chi.values()
    total = compensated_sum(chi_values[units] * zeta[units]) if len(units) else 0j
    value = complex(q ** (-s) * total)
    result = ComplexApprox(value, _combined_error(q, s, zeta, errors, units, 8.0))

    if result.abs_error > tol:
        raise PrecisionError(
            f"L({s}, chi_{chi.index} mod {q}) reached error {result.abs_error:.3g} > tol {tol:g}",
            best_effort=result,
            achieved=result.abs_error,
        )
    return result


def _all_chars_column(q: int, s: complex, tol: float) -> Tuple[np.ndarray, np.ndarray]:
    """L(s, chi) for every chi mod q via the group transform"""
    group = build_group(q)
    if s == 1:
        raise PoleError("L(s, chi_0) has a pole at s = 1; evaluate nontrivial characters one by one")
    zeta, errors = _residue_zeta(q, s, tol)
    units = group.structure.units
    sums = group_transform(zeta, group.structure)
    values = q ** (-s) * sums
    rounding = 8.0 + 4.0 * math.log2(group.size + 1)
    err = _combined_error(q, s, zeta, errors, units, rounding)
    errors = np.full(group.size, err)
    if err > tol:
        raise PrecisionError(
            f"L({s}, chi mod {q}) reached error {err:.3g} > tol {tol:g}",
            best_effort=(values, errors),
            achieved=err,
        )
    return values, errors


def _grid_column(task) -> Tuple[np.ndarray, np.ndarray]:
    """Worker: one s-point for the selected characters"""
    q, s, tol, method, indices = task
    if method == FAST:
        try:
            values, errors = _all_chars_column(q, s, tol)
        except PrecisionError as exc:
            log_with_context(logger, "WARNING", "L-value column above tolerance",
                             q=q, s=str(s), achieved=exc.details["achieved_error"], tol=tol)
            values, errors = exc.best_effort
        return values[list(indices)], errors[list(indices)]

    group = build_group(q)
    values = np.empty(len(indices), dtype=np.complex128)
    errors = np.empty(len(indices))
    for row, index in enumerate(indices):
        try:
            approx = l_value(group.character(index), s, tol)
        except PrecisionError as exc:
            approx = exc.best_effort
        values[row], errors[row] = approx.value, approx.abs_error
    return values, errors


def l_value_grid(
    q: int,
    s_points: Sequence[complex],
    tol: Optional[float] = None,
    indices: Optional[Sequence[int]] = None,
    method: str = FAST,
    workers: int = 1,
) -> LValueGrid:
    """
    L-values for many characters and s-points, parallel over s-points.

    Args:
        q: Modulus
        s_points: Complex arguments
        tol: Absolute tolerance
        indices: Character indices (default: all)
        method: "fast" (group transform) or "naive" (per character)
        workers: Worker processes

    Returns:
        LValueGrid
    """
    tol = settings.DEFAULT_TOL if tol is None else tol
    if method not in (FAST, NAIVE):
        raise DomainError(f"unknown method {method!r}", constraint="method in {fast, naive}")
    group = build_group(q)
    indices = tuple(range(group.size)) if indices is None else tuple(int(i) for i in indices)
    s_points = tuple(complex(s) for s in s_points)

    tasks = [(q, s, tol, method, indices) for s in s_points]
    columns = parallel_map(_grid_column, tasks, workers=workers)

    n_rows = len(indices)
    values = np.empty((n_rows, len(s_points)), dtype=np.complex128)
    errors = np.empty((n_rows, len(s_points)))
    for col, (v, e) in enumerate(columns):
        values[:, col] = v
        errors[:, col] = e

    return LValueGrid(
        q=q,
        s_points=s_points,
        character_indices=np.asarray(indices, dtype=np.int64),
        values=values,
        errors=errors,
    )


def l_values_all_chars(q: int, s: complex, tol: Optional[float] = None) -> LValueGrid:
    """
    L(s, chi) for every character mod q at one s-point (fast path).

    Returns:
        LValueGrid with one column, rows in character-index order

    Raises:
        PrecisionError: combined error above tol (best effort attached)
    """
    tol = settings.DEFAULT_TOL if tol is None else tol
    s = complex(s)
    values, errors = _all_chars_column(q, s, tol)
    return LValueGrid(
        q=q,
        s_points=(s,),
        character_indices=np.arange(len(values), dtype=np.int64),
        values=values[:, None],
        errors=errors[:, None],
    )


# ==================== SHIFT MATRICES ====================

def _check_moment_modulus(q: int) -> None:
    if q < MIN_THETA_MODULUS:
        raise DomainError(f"moments require q >= {MIN_THETA_MODULUS} (got {q})",
                          constraint=f"q >= {MIN_THETA_MODULUS}")


def _shift_matrix(
    group: CharacterGroup,
    shifts: Sequence[float],
    tol: float,
    workers: int,
) -> Tuple[np.ndarray, np.ndarray]:
    """
    |L(1/2 + i t_j, chi)| and errors for every chi (rows) and shift (columns).

    Each distinct |t| is evaluated once; a negative shift reads the row of
    the conjugate character, since L(1/2 - it, chi) = conj L(1/2 + it, conj chi).
    """
    heights = sorted({abs(float(t)) for t in shifts})
    grid = l_value_grid(group.q, [0.5 + 1j * h for h in heights], tol, workers=workers)
    conj = group.conjugate_indices()
    magnitudes = np.abs(grid.values)

    absval = np.empty((group.size, len(shifts)))
    errors = np.empty((group.size, len(shifts)))
    for j, t in enumerate(shifts):
        col = heights.index(abs(float(t)))
        rows = np.arange(group.size) if t >= 0 else conj
        absval[:, j] = magnitudes[rows, col]
        errors[:, j] = grid.errors[rows, col]
    return absval, errors


def _product_error(absval: np.ndarray, errors: np.ndarray) -> np.ndarray:
    """First-order error of prod_j |L_j| per row"""
    out = np.zeros(absval.shape[0])
    for j in range(absval.shape[1]):
        others = np.prod(np.delete(absval, j, axis=1), axis=1)
        out += errors[:, j] * others
    return out


# ==================== MOMENTS ====================

def central_moment(
    q: int,
    k: int,
    tol: Optional[float] = None,
    family: CharacterFamily = CharacterFamily.STAR,
    workers: int = 1,
) -> MomentReport:
    """
    M_2k(q) = sum_{chi in family} |L(1/2, chi)|^(2k), normalised by q (log q)^(k^2).

    Args:
        q: Modulus >= 3
        k: Moment order >= 0
        tol: Absolute tolerance
        family: Character family (default: primitive characters)
        workers: Worker processes

    Returns:
        MomentReport
    """
    tol = settings.DEFAULT_TOL if tol is None else tol
    _check_moment_modulus(q)
    if k < 0:
        raise DomainError(f"k must be >= 0 (got {k})", constraint="k >= 0")

    family = CharacterFamily(family)
    group = build_group(q)
    indices = group.family_indices(family)
    grid = l_value_grid(q, [0.5], tol, indices=indices, workers=workers)
    magnitudes = np.abs(grid.values[:, 0])
    errors = grid.errors[:, 0]

    raw = float(chunked_sum(magnitudes ** (2 * k))) if len(indices) else 0.0
    abs_error = float(np.sum(2 * k * magnitudes ** max(2 * k - 1, 0) * errors)) if k else 0.0
    normalization = q * math.log(q) ** (k * k)

    return MomentReport(
        q=q,
        k=k,
        family=family.value,
        raw=raw,
        normalization=normalization,
        ratio=raw / normalization,
        eps=tol,
        family_size=len(indices),
        abs_error=abs_error,
        empty_family=not len(indices),
    )


def shifted_moment(
    q: int,
    shifts,
    tol: Optional[float] = None,
    family: CharacterFamily = CharacterFamily.STAR,
    epsilon: Optional[float] = None,
    workers: int = 1,
) -> MomentReport:
    """
    sum_{chi in family} prod_i |L(1/2 + i t_i, chi)|, with the shifted-moment
    bound shape alongside when q >= 16.

    Args:
        q: Modulus >= 3
        shifts: ShiftTuple or 2k reals, |t| <= 50
        tol: Absolute tolerance
        family: STAR (default) or a nonquadratic family
        epsilon: Exponent knob of the bound
        workers: Worker processes

    Returns:
        MomentReport with shifts, bound and bound_ratio
    """
    tol = settings.DEFAULT_TOL if tol is None else tol
    _check_moment_modulus(q)
    shifts = ShiftTuple.of(shifts)
    if shifts.max_height > MAX_SHIFT_HEIGHT:
        raise DomainError(
            f"shifts must satisfy |t| <= {MAX_SHIFT_HEIGHT:g} (got {shifts.max_height:g})",
            constraint=f"|t| <= {MAX_SHIFT_HEIGHT:g}",
        )

    family = CharacterFamily(family)
    group = build_group(q)
    indices = group.family_indices(family)
    absval, errors = _shift_matrix(group, shifts.shifts, tol, workers)

    products = np.prod(absval[indices], axis=1)
    raw = float(chunked_sum(products)) if len(indices) else 0.0
    abs_error = float(np.sum(_product_error(absval[indices], errors[indices])))
    k = shifts.k
    normalization = q * math.log(q) ** (k * k)

    bound = bound_ratio = None
    if q >= MIN_MODULUS_E_TERM:
        bound = shifted_moment_bound(q, shifts.shifts, k, epsilon)
        bound_ratio = raw / bound

    return MomentReport(
        q=q,
        k=k,
        family=family.value,
        raw=raw,
        normalization=normalization,
        ratio=raw / normalization,
        eps=tol,
        family_size=len(indices),
        abs_error=abs_error,
        empty_family=not len(indices),
        shifts=list(shifts.shifts),
        bound=bound,
        bound_ratio=bound_ratio,
    )


# ==================== LARGE VALUES ====================

def _clamped_log_sums(absval: np.ndarray, errors: np.ndarray) -> Tuple[np.ndarray, np.ndarray]:
    """sum_j log|L_j| with log|L| = -50 wherever |L| < its error; returns (sums, clamped mask)"""
    small = absval < errors
    with np.errstate(divide="ignore"):
        logs = np.where(small, LOG_ABS_CLAMP, np.log(np.where(small, 1.0, absval)))
    return logs.sum(axis=1), small.any(axis=1)


def large_value_counts(
    q: int,
    shifts,
    v_grid: Sequence[float],
    tol: Optional[float] = None,
    family: CharacterFamily = CharacterFamily.NONQUADRATIC,
    workers: int = 1,
) -> LargeValueHistogram:
    """
    N_t(q, V) = #{chi in family : sum_i log|L(1/2 + i t_i, chi)| >= V} on a V grid.

    Args:
        q: Modulus >= 3
        shifts: ShiftTuple or 2k reals
        v_grid: Ascending levels
        tol: Absolute tolerance
        family: NONQUADRATIC (default, all chi with chi^2 != chi_0) or another family
        workers: Worker processes

    Returns:
        LargeValueHistogram
    """
    tol = settings.DEFAULT_TOL if tol is None else tol
    _check_moment_modulus(q)
    shifts = ShiftTuple.of(shifts)
    v = np.asarray(list(v_grid), dtype=np.float64)
    if np.any(np.diff(v) < 0):
        raise DomainError("V grid must be ascending", constraint="ascending V grid")
    if shifts.max_height > MAX_SHIFT_HEIGHT:
        raise DomainError(f"shifts must satisfy |t| <= {MAX_SHIFT_HEIGHT:g}",
                          constraint=f"|t| <= {MAX_SHIFT_HEIGHT:g}")

    family = CharacterFamily(family)
    group = build_group(q)
    indices = group.family_indices(family)
    absval, errors = _shift_matrix(group, shifts.shifts, tol, workers)
    sums, clamped = _clamped_log_sums(absval[indices], errors[indices])

    counts = (sums[None, :] >= v[:, None]).sum(axis=1)
    flagged = [int(i) for i in indices[clamped]]
    if flagged:
        log_with_context(
            logger, "WARNING", "log|L| clamped for near-vanishing values",
            q=q, characters=flagged, clamp=LOG_ABS_CLAMP,
        )

    return LargeValueHistogram(
        q=q,
        shifts=list(shifts.shifts),
        family=family.value,
        excluded_quadratic=family in (CharacterFamily.NONQUADRATIC, CharacterFamily.STAR_NONQUADRATIC),
        family_size=len(indices),
        v_grid=[float(x) for x in v],
        counts=[int(c) for c in counts],
        flagged=flagged,
    )


def histogram_moment(histogram: LargeValueHistogram) -> float:
    """
    Lower Riemann sum of int e^V N_t(q, V) dV over the histogram grid.

    N is non-increasing, so on [v_i, v_{i+1}] it is at least N(v_{i+1});
    below v_0 it is at least N(v_0). The result never exceeds the direct
    sum of prod |L| over the same family.
    """
    v = np.asarray(histogram.v_grid, dtype=np.float64)
    n = np.asarray(histogram.counts, dtype=np.float64)
    if not len(v):
        return 0.0
    pieces = [n[0] * math.exp(v[0])]
    pieces.extend(n[1:] * (np.exp(v[1:]) - np.exp(v[:-1])))
    return float(compensated_sum(np.asarray(pieces, dtype=np.float64)))


# ==================== GRH MAJORANT ====================

@lru_cache(maxsize=1)
def lambda0() -> float:
    """Unique positive root of e^(-lambda) = lambda (0.567143...)"""
    low, high = LAMBDA0_BRACKET
    return float(bisect(lambda lam: math.exp(-lam) - lam, low, high, xtol=1e-15, maxiter=200))


def _prime_power_terms(chi: Character, x: float, sigma: float, t: float, primes_only: bool):
    """(n, coefficient) with coefficient = chi(n) / (e n^(sigma + it)) * log(x/n) / log x"""
    table = cached_sieve(max(int(x), 2))
    ns = np.nonzero(table.power_base[: int(x) + 1])[0]
    exponents = table.power_exponent[ns]
    if primes_only:
        keep = exponents == 1
        ns, exponents = ns[keep], exponents[keep]

    chi_values = roots_of_unity(chi.exponent_values()[ns % chi.q], chi.group.exponent)
    nf = ns.astype(np.float64)
    log_x = math.log(x)
    coeff = chi_values / exponents * np.exp(-(sigma + 1j * t) * np.log(nf)) * (np.log(x / nf) / log_x)
    return ns, exponents, coeff


def grh_majorant(
    chi: Character,
    t: float,
    x: float,
    lam: float = MAJORANT_LAMBDA,
    primes_only: bool = False,
    T: Optional[float] = None,
) -> float:
    """
    Re sum_{n<=x} chi(n) Lambda(n) / (n^(1/2 + lam/log x + it) log n) * log(x/n)/log x
        + ((1 + lam)/2) (log q + log+ T) / log x

    Args:
        chi: Character mod q
        t: Height
        x: Length of the Dirichlet polynomial (>= 2)
        lam: lambda >= lambda0
        primes_only: Keep only the primes (Lambda(p)/log p = 1)
        T: Height parameter (default: |t|)

    Returns:
        Majorant value
    """
    if lam < lambda0():
        raise DomainError(f"lambda must be >= lambda0 = {lambda0():.6f} (got {lam})",
                          constraint="lambda >= lambda0")
    if x < 2:
        raise DomainError(f"x must be >= 2 (got {x})", constraint="x >= 2")

    T = abs(t) if T is None else T
    log_x = math.log(x)
    _, _, coeff = _prime_power_terms(chi, x, 0.5 + lam / log_x, t, primes_only)
    series = compensated_sum(coeff).real if len(coeff) else 0.0
    return series + (1.0 + lam) / 2.0 * (math.log(chi.q) + log_plus(T)) / log_x


def prime_power_contribution(chi: Character, t: float, x: float, sigma: float = 0.5) -> float:
    """Re of the n = p^e, e >= 2 part of the weighted Dirichlet polynomial"""
    if x < 2:
        raise DomainError(f"x must be >= 2 (got {x})", constraint="x >= 2")
    _, exponents, coeff = _prime_power_terms(chi, x, sigma, t, primes_only=False)
    higher = coeff[exponents >= 2]
    return compensated_sum(higher).real if len(higher) else 0.0


def majorant_diagnostic(
    q: int,
    shifts: Sequence[float] = (0.0,),
    x: Optional[float] = None,
    lam: float = MAJORANT_LAMBDA,
    slack: float = MAJORANT_SLACK,
    primes_only: bool = True,
    tol: Optional[float] = None,
    family: CharacterFamily = CharacterFamily.NONQUADRATIC,
    workers: int = 1,
) -> List[MajorantRow]:
    """
    log|L(1/2 + it, chi)| against majorant + slack for every chi in the family.

    Violations are logged, not raised.

    Args:
        q: Modulus
        shifts: Heights t
        x: Polynomial length (default: (log q)^2)
        lam: lambda (default 0.6)
        slack: Uniform constant absorbing the lower-order term
        primes_only: Use the prime-restricted majorant
        tol: Absolute tolerance
        family: Characters to test (default: chi^2 != chi_0)
        workers: Worker processes

    Returns:
        One MajorantRow per (character, t)
    """
    tol = settings.DEFAULT_TOL if tol is None else tol
    _check_moment_modulus(q)
    x = math.log(q) ** 2 if x is None else x
    heights = [float(t) for t in shifts]
    if any(abs(t) > MAX_SHIFT_HEIGHT for t in heights):
        raise DomainError(f"shifts must satisfy |t| <= {MAX_SHIFT_HEIGHT:g}",
                          constraint=f"|t| <= {MAX_SHIFT_HEIGHT:g}")

    group = build_group(q)
    indices = group.family_indices(family)
    absval, errors = _shift_matrix(group, heights, tol, workers)

    rows: List[MajorantRow] = []
    for index in indices:
        chi = group.character(int(index))
        for j, t in enumerate(heights):
            clamped = bool(absval[index, j] < errors[index, j])
            log_abs = LOG_ABS_CLAMP if clamped else math.log(absval[index, j])
            majorant = grh_majorant(chi, t, x, lam, primes_only)
            margin = majorant + slack - log_abs
            rows.append(MajorantRow(
                q=q,
                character=int(index),
                t=t,
                log_abs_l=log_abs,
                majorant=majorant,
                margin=margin,
                violation=margin < 0,
                clamped=clamped,
            ))

    violations = [r for r in rows if r.violation]
    if violations:
        log_with_context(
            logger, "WARNING", "Majorant inequality violated",
            q=q, count=len(violations), worst_margin=min(r.margin for r in violations),
        )
    else:
        logger.info(f"Majorant holds for all {len(rows)} (chi, t) pairs at q={q}")
    return rows


# ==================== PRIME MOMENTS ====================

def prime_moment_check(q: int, x: float, k: int, t: float = 0.0) -> PrimeMomentCheck:
    """
    sum_{chi mod q} |sum_{p<=x} chi(p) p^(-1/2-it)|^(2k) against
    phi(q) k! (sum_{p<=x} 1/p)^k, valid when x^k < q.

    Returns:
        PrimeMomentCheck (ratio = lhs / rhs, at most 1 up to rounding)
    """
    if k < 1:
        raise DomainError(f"k must be >= 1 (got {k})", constraint="k >= 1")
    if x < 2:
        raise DomainError(f"x must be >= 2 (got {x})", constraint="x >= 2")
    if x ** k >= q:
        raise DomainError(f"requires x^k < q (got {x}^{k} >= {q})", constraint="x^k < q")

    group = build_group(q)
    primes = cached_sieve(max(int(x), 2)).primes_up_to(x)
    pf = primes.astype(np.float64)
    weights = np.zeros(q, dtype=np.complex128)
    np.add.at(weights, primes % q, np.exp(-(0.5 + 1j * t) * np.log(pf)))

    sums = group_transform(weights, group.structure)
    lhs = float(chunked_sum(np.abs(sums) ** (2 * k)))
    rhs = euler_phi(q) * math.factorial(k) * float(compensated_sum(1.0 / pf)) ** k
    return PrimeMomentCheck(q=q, x=float(x), k=k, t=float(t), lhs=lhs, rhs=rhs, ratio=lhs / rhs)


__all__ = [
    "ShiftTuple",
    "LValueGrid",
    "l_value",
    "l_value_grid",
    "l_values_all_chars",
    "central_moment",
    "shifted_moment",
    "large_value_counts",
    "histogram_moment",
    "lambda0",
    "grh_majorant",
    "prime_power_contribution",
    "majorant_diagnostic",
    "prime_moment_check",
]
