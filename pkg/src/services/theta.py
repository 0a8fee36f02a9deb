"""
Theta functions of Dirichlet characters

    theta(eta, x, chi) = sum_{n>=1} chi(n) n^eta exp(-pi n^2 x / q)

single and batched over all characters, their moments over the even and odd
primitive families, modulus scans, and the Mellin-integral check.
"""

import logging
import math
from dataclasses import dataclass, field
from functools import lru_cache
from typing import Dict, List, Optional, Sequence

import numpy as np
from scipy.integrate import quad

from src.config.constants import (
    MELLIN_DEFAULT_HEIGHT,
    MELLIN_DEFAULT_STEP,
    MELLIN_HEIGHT_INCREMENT,
    MELLIN_MAX_HEIGHT,
    MELLIN_MIN_STEP,
    MIN_THETA_MODULUS,
    CharacterFamily,
    Parity,
    family_for_parity,
)
from src.config.settings import settings
from src.schemas.reports import MellinCheckResult, MomentReport, TrendSummary
from src.services.characters import Character, build_group, roots_of_unity
from src.services.lfunc import l_value_grid
from src.services.numtheory import primes_in_range
from src.services.specfun import EPS, ComplexApprox, abs_gamma, log_gamma_vector
from src.services.transforms import group_transform
from src.utils.exceptions import DomainError
from src.utils.logger import log_with_context
from src.utils.parallel import parallel_map
from src.utils.summation import chunked_sum, compensated_sum

logger = logging.getLogger(__name__)

FAST = "fast"
NAIVE = "naive"


# ==================== TYPES ====================

@dataclass(frozen=True)
class ThetaRequest:
    """Parameters of one truncated theta series"""

    q: int
    x: float = 1.0
    eta: int = 0
    eps: float = 1e-10

    def __post_init__(self):
        if self.q < 1:
            raise DomainError(f"q must be >= 1 (got {self.q})", constraint="q >= 1")
        if not self.x > 0:
            raise DomainError(f"x must be > 0 (got {self.x})", constraint="x > 0")
        if self.eta not in (0, 1):
            raise DomainError(f"eta must be 0 or 1 (got {self.eta})", constraint="eta in {0, 1}")
        if not self.eps > 0:
            raise DomainError(f"eps must be > 0 (got {self.eps})", constraint="eps > 0")

    @property
    def length(self) -> int:
        return truncation_length(self.q, self.x, self.eta, self.eps)

    def terms(self) -> np.ndarray:
        """n^eta exp(-pi n^2 x / q) for n = 1..N"""
        n = np.arange(1, self.length + 1, dtype=np.float64)
        return n ** self.eta * np.exp(-math.pi * n * n * self.x / self.q)

    def residue_weights(self) -> np.ndarray:
        """w_a = sum_{n = a mod q, n <= N} n^eta exp(-pi n^2 x / q)"""
        n = np.arange(1, self.length + 1, dtype=np.int64)
        return np.bincount(n % self.q, weights=self.terms(), minlength=self.q)


@dataclass(frozen=True, eq=False)
class ThetaBatch:
    """theta(eta_chi, x, chi) for every chi mod q, in character-index order"""

    q: int
    x: float
    eps: float
    values: np.ndarray = field(repr=False)
    errors: np.ndarray = field(repr=False)

    def value(self, index: int) -> ComplexApprox:
        return ComplexApprox(self.values[index], self.errors[index])

    def __len__(self) -> int:
        return len(self.values)


# ==================== TRUNCATION ====================

def _log_tail_bounds(q: int, x: float, eta: int, N: np.ndarray) -> np.ndarray:
    """
    log of a_{N+1} / (1 - r_N) with a_n = n^eta e^{-pi n^2 x/q} and
    r_N = ((N+2)/(N+1))^eta e^{-pi (2N+3) x/q}; +inf where r_N >= 1.
    """
    n1 = N + 1.0
    log_a = eta * np.log(n1) - math.pi * n1 * n1 * x / q
    log_r = eta * np.log((N + 2.0) / n1) - math.pi * (2.0 * N + 3.0) * x / q
    with np.errstate(divide="ignore", invalid="ignore"):
        out = log_a - np.log(-np.expm1(log_r))
    return np.where(log_r < 0, out, np.inf)


@lru_cache(maxsize=256)
def truncation_length(q: int, x: float, eta: int, eps: float) -> int:
    """
    Smallest N >= 0 whose geometric tail bound
    sum_{n>N} n^eta e^{-pi n^2 x/q} <= a_{N+1} / (1 - r_N) is <= eps.

    Args:
        q: Modulus
        x: Positive real
        eta: 0 or 1
        eps: Tolerance

    Returns:
        N
    """
    if not x > 0 or not eps > 0:
        raise DomainError("truncation_length requires x > 0 and eps > 0",
                          constraint="x > 0, eps > 0")

    target = math.log(eps)
    guess = math.sqrt(q * (abs(target) + 10.0) / (math.pi * x))
    upper = int(2 * guess) + 16
    start = 0
    while True:
        N = np.arange(start, upper + 1, dtype=np.float64)
        hits = np.nonzero(_log_tail_bounds(q, x, eta, N) <= target)[0]
        if len(hits):
            return int(N[hits[0]])
        start, upper = upper + 1, 2 * upper


# ==================== SINGLE VALUES ====================

def theta_value(
    chi: Character,
    x: float = 1.0,
    eps: Optional[float] = None,
    eta: Optional[int] = None,
) -> ComplexApprox:
    """
    Truncated theta series of one character (naive path).

    Args:
        chi: Character mod q
        x: Positive real
        eps: Error target; the result's abs_error is <= eps
        eta: Exponent (default: the parity of chi)

    Returns:
        ComplexApprox
    """
    eps = settings.DEFAULT_TOL if eps is None else eps
    eta = chi.parity if eta is None else eta
    request = ThetaRequest(q=chi.q, x=x, eta=eta, eps=eps / 2)

    N = request.length
    if N == 0:
        return ComplexApprox(0j, eps / 2)
    n = np.arange(1, N + 1, dtype=np.int64)
    terms = request.terms()
    chi_values = roots_of_unity(chi.exponent_values()[n % chi.q], chi.group.exponent)
    value = compensated_sum(chi_values * terms)
    rounding = 4.0 * EPS * float(terms.sum())
    return ComplexApprox(value, eps / 2 + rounding)


# ==================== ALL CHARACTERS ====================

def _check_theta_modulus(q: int) -> None:
    if q < MIN_THETA_MODULUS:
        raise DomainError(f"q must be >= {MIN_THETA_MODULUS} (got {q})",
                          constraint=f"q >= {MIN_THETA_MODULUS}")


def theta_all_chars(
    q: int,
    x: float = 1.0,
    eps: Optional[float] = None,
    method: str = FAST,
) -> ThetaBatch:
    """
    theta(eta_chi, x, chi) for all characters mod q.

    The fast path builds the residue weights once per parity and runs one
    group transform per parity; each character reads the transform of its
    own parity.

    Args:
        q: Modulus >= 3
        x: Positive real
        eps: Error target per value
        method: "fast" or "naive"

    Returns:
        ThetaBatch
    """
    eps = settings.DEFAULT_TOL if eps is None else eps
    _check_theta_modulus(q)
    group = build_group(q)

    if method == NAIVE:
        approx = [theta_value(chi, x, eps) for chi in group]
        return ThetaBatch(
            q=q, x=x, eps=eps,
            values=np.array([a.value for a in approx], dtype=np.complex128),
            errors=np.array([a.abs_error for a in approx]),
        )
    if method != FAST:
        raise DomainError(f"unknown method {method!r}", constraint="method in {fast, naive}")

    requests = [ThetaRequest(q=q, x=x, eta=eta, eps=eps / 2) for eta in (0, 1)]
    weights = np.vstack([r.residue_weights() for r in requests])
    sums = group_transform(weights, group.structure)

    parity = group.parities
    values = np.where(parity == 0, sums[0], sums[1])
    rounding_factor = 8.0 + 4.0 * math.log2(group.size + 1)
    weight_mass = np.abs(weights).sum(axis=1)
    errors = eps / 2 + rounding_factor * EPS * np.where(parity == 0, weight_mass[0], weight_mass[1])
    logger.debug(f"Theta batch q={q}: N_even={requests[0].length}, N_odd={requests[1].length}")
    return ThetaBatch(q=q, x=x, eps=eps, values=values, errors=errors)


# ==================== MOMENTS ====================

def moment_normalization(q: int, k: int, parity: Parity) -> float:
    """phi(q) q^(k/2) (log q)^((k-1)^2) for even, phi(q) q^(3k/2) (log q)^((k-1)^2) for odd"""
    phi = build_group(q).size
    power = k / 2 if Parity(parity) is Parity.EVEN else 3 * k / 2
    return phi * q ** power * math.log(q) ** ((k - 1) ** 2)


def theta_moment(
    q: int,
    k: int,
    parity: Parity = Parity.EVEN,
    eps: Optional[float] = None,
    method: str = FAST,
    x: float = 1.0,
) -> MomentReport:
    """
    S_2k(q) = sum |theta(x, chi)|^(2k) over even primitive nontrivial (parity
    even) or odd primitive (parity odd) characters, with normalised ratio.

    Args:
        q: Modulus >= 3
        k: Moment order >= 1
        parity: "even" or "odd"
        eps: Error target per theta value
        method: "fast" or "naive"
        x: Theta argument (moments use x = 1)

    Returns:
        MomentReport; an empty family gives raw 0 with empty_family set
    """
    eps = settings.DEFAULT_TOL if eps is None else eps
    _check_theta_modulus(q)
    if k < 1:
        raise DomainError(f"k must be >= 1 (got {k})", constraint="k >= 1")

    parity = Parity(parity)
    family = CharacterFamily(family_for_parity(parity.value))
    group = build_group(q)
    indices = group.family_indices(family)
    normalization = moment_normalization(q, k, parity)

    if not len(indices):
        log_with_context(logger, "WARNING", "Empty character family", q=q, family=family.value)
        return MomentReport(
            q=q, k=k, family=family.value, parity=parity.value, raw=0.0,
            normalization=normalization, ratio=0.0, eps=eps, family_size=0,
            empty_family=True, zero_count=0,
        )

    batch = theta_all_chars(q, x, eps, method)
    magnitudes = np.abs(batch.values[indices])
    errors = batch.errors[indices]
    raw = float(chunked_sum(magnitudes ** (2 * k)))
    abs_error = float(np.sum(2 * k * magnitudes ** (2 * k - 1) * errors))
    zeros = magnitudes <= errors
    if np.any(zeros):
        log_with_context(
            logger, "INFO", "Theta values indistinguishable from zero",
            q=q, characters=[int(i) for i in indices[zeros]],
        )

    return MomentReport(
        q=q,
        k=k,
        family=family.value,
        parity=parity.value,
        raw=raw,
        normalization=normalization,
        ratio=raw / normalization,
        eps=eps,
        family_size=len(indices),
        abs_error=abs_error,
        zero_count=int(zeros.sum()),
        flagged=[int(i) for i in indices[zeros]],
    )


def _scan_task(task) -> MomentReport:
    q, k, parity, eps = task
    return theta_moment(q, k, parity, eps)


def theta_scan(
    start: int,
    stop: int,
    k: int,
    parity: Parity = Parity.EVEN,
    eps: Optional[float] = None,
    workers: int = 1,
) -> List[MomentReport]:
    """
    theta_moment for every prime modulus in [start, stop], parallel over moduli.

    Returns:
        Reports in increasing q
    """
    eps = settings.DEFAULT_TOL if eps is None else eps
    if start < MIN_THETA_MODULUS or stop < start:
        raise DomainError(f"invalid prime range {start}:{stop}",
                          constraint=f"{MIN_THETA_MODULUS} <= A <= B")
    primes = primes_in_range(start, stop)
    logger.info(f"Theta scan over {len(primes)} primes in [{start}, {stop}] (k={k}, {Parity(parity).value})")
    tasks = [(q, k, Parity(parity).value, eps) for q in primes]
    return parallel_map(_scan_task, tasks, workers=workers)


def ratio_trend(reports: Sequence[MomentReport]) -> TrendSummary:
    """
    Stability of normalised ratios along a scan: coefficient of variation,
    mean ratio of the first and last deciles (by q) and their max/min.
    """
    ordered = sorted((r for r in reports if not r.empty_family), key=lambda r: r.q)
    ratios = np.array([r.ratio for r in ordered], dtype=np.float64)
    if not len(ratios):
        raise DomainError("ratio_trend needs at least one non-empty report")

    mean = float(ratios.mean())
    cv = float(ratios.std(ddof=1) / mean) if len(ratios) > 1 and mean > 0 else 0.0
    decile = max(1, len(ratios) // 10)
    first = float(ratios[:decile].mean())
    last = float(ratios[-decile:].mean())
    low, high = min(first, last), max(first, last)
    drift = high / low if low > 0 else float("inf")

    return TrendSummary(
        count=len(ratios),
        mean=mean,
        coefficient_of_variation=cv,
        first_decile_mean=first,
        last_decile_mean=last,
        drift_factor=drift,
    )


# ==================== MELLIN CHECK ====================

def mellin_prefactor(q: int) -> float:
    """(1 / 2 pi) (q / pi)^(1/4)"""
    return (q / math.pi) ** 0.25 / (2.0 * math.pi)


def gamma_tail(height: float) -> float:
    """2 int_H^inf |Gamma(1/4 + it)| dt"""
    value, _ = quad(lambda t: float(abs_gamma(0.25 + 1j * t)[0]), height, np.inf, limit=200)
    return 2.0 * value


def _check_mellin_character(chi: Character) -> None:
    if not chi.is_even or not chi.is_primitive or chi.is_trivial:
        raise DomainError(
            f"Mellin check needs an even primitive nontrivial character "
            f"(chi_{chi.index} mod {chi.q}: parity={chi.parity}, conductor={chi.conductor})",
            constraint="chi even, primitive, nontrivial",
        )


def _quadrature(
    q: int,
    indices: Sequence[int],
    height: float,
    step: float,
    tol: float,
    workers: int,
) -> Dict[int, complex]:
    """
    Trapezoid rule for (1/2pi)(q/pi)^(1/4) int_{-H}^{H} L(1/2 + 2it, chi) (q/pi)^(it) Gamma(1/4 + it) dt.
    """
    n = int(round(height / step))
    t = np.arange(-n, n + 1, dtype=np.float64) * step
    grid = l_value_grid(q, 0.5 + 2j * t, tol, indices=indices, workers=workers)
    log_gamma, _ = log_gamma_vector(0.25 + 1j * t)
    kernel = np.exp(log_gamma + 1j * t * math.log(q / math.pi))

    integrand = grid.values * kernel[None, :]
    trapezoid = step * (compensated_sum(integrand, axis=1) - 0.5 * (integrand[:, 0] + integrand[:, -1]))
    quadrature = mellin_prefactor(q) * trapezoid
    return {int(i): complex(v) for i, v in zip(indices, quadrature)}


def _auto_height(q: int, eps: float) -> float:
    height = MELLIN_DEFAULT_HEIGHT
    while mellin_prefactor(q) * gamma_tail(height) >= eps / 10 and height < MELLIN_MAX_HEIGHT:
        height += MELLIN_HEIGHT_INCREMENT
    return height


def mellin_check_all(
    q: int,
    height: Optional[float] = None,
    step: Optional[float] = None,
    eps: Optional[float] = None,
    workers: int = 1,
    indices: Optional[Sequence[int]] = None,
) -> List[MellinCheckResult]:
    """
    Compare theta(0, 1, chi) with its Mellin integral on Re s = 1/4 for every
    even primitive nontrivial chi mod q (or the given indices).

    Without a height, H grows in steps of 1/2 until the Gamma tail bound is
    below eps/10; without a step, h is halved from 1/64 until the quadrature
    moves by less than eps/10.

    Returns:
        One MellinCheckResult per character
    """
    eps = settings.DEFAULT_TOL if eps is None else eps
    group = build_group(q)
    if indices is None:
        indices = [int(i) for i in group.family_indices(CharacterFamily.EVEN_PRIMITIVE_NONTRIVIAL)]
    for index in indices:
        _check_mellin_character(group.character(index))
    if not indices:
        return []

    H = _auto_height(q, eps) if height is None else float(height)
    if not H > 0 or (step is not None and not step > 0):
        raise DomainError("height and step must be > 0", constraint="H > 0, h > 0")

    if step is None:
        h = MELLIN_DEFAULT_STEP
        current = _quadrature(q, indices, H, h, eps, workers)
        while h / 2 >= MELLIN_MIN_STEP:
            finer = _quadrature(q, indices, H, h / 2, eps, workers)
            change = max(abs(finer[i] - current[i]) for i in indices)
            h, current = h / 2, finer
            if change < eps / 10:
                break
    else:
        h = float(step)
        current = _quadrature(q, indices, H, h, eps, workers)

    tail = mellin_prefactor(q) * gamma_tail(H)
    results = []
    for index in indices:
        series = theta_value(group.character(index), 1.0, eps).value
        quadrature = current[index]
        results.append(MellinCheckResult(
            q=q,
            character=index,
            series_real=series.real,
            series_imag=series.imag,
            quadrature_real=quadrature.real,
            quadrature_imag=quadrature.imag,
            residual=abs(series - quadrature),
            height=H,
            step=h,
            tail_bound=tail,
        ))
        logger.debug(f"Mellin q={q} chi={index}: residual={abs(series - quadrature):.3e}")
    return results


def mellin_check(
    chi: Character,
    height: Optional[float] = None,
    step: Optional[float] = None,
    eps: Optional[float] = None,
    workers: int = 1,
) -> MellinCheckResult:
    """
    Mellin check for one even primitive nontrivial character.

    Raises:
        DomainError: chi odd, imprimitive or trivial
    """
    _check_mellin_character(chi)
    return mellin_check_all(chi.q, height, step, eps, workers, indices=[chi.index])[0]


__all__ = [
    "ThetaRequest",
    "ThetaBatch",
    "truncation_length",
    "theta_value",
    "theta_all_chars",
    "moment_normalization",
    "theta_moment",
    "theta_scan",
    "ratio_trend",
    "mellin_prefactor",
    "gamma_tail",
    "mellin_check",
    "mellin_check_all",
]
