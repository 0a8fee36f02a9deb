"""
Steinhaus random multiplicative model of theta(1, chi).

f is completely multiplicative with f(p) independent and uniform on the unit
circle; the model replaces chi(n) by f(n) in the theta series. Sample i of a
run is drawn from numpy.random.default_rng(seed + i), so results do not
depend on how samples are split across workers.
"""

import logging
import math
from dataclasses import dataclass, field
from functools import lru_cache
from typing import List, Optional, Sequence, Tuple

import numpy as np

from src.config.constants import MEDIAN_OF_MEANS_GROUPS, MIN_MODEL_SAMPLES, RNG_ALGORITHM
from src.config.settings import settings
from src.schemas.reports import ModelMomentEstimate
from src.services.numtheory import smallest_prime_factors
from src.services.theta import ThetaRequest, truncation_length
from src.utils.exceptions import DomainError
from src.utils.parallel import parallel_map, split_chunks
from src.utils.summation import chunked_sum, compensated_sum

logger = logging.getLogger(__name__)

TWO_PI = 2.0 * math.pi


@lru_cache(maxsize=32)
def _exponent_matrix(N: int) -> Tuple[np.ndarray, np.ndarray]:
    """
    (primes <= N, E) with E[n - 1, j] the exponent of primes[j] in n, n = 1..N.
    """
    spf = smallest_prime_factors(N)
    primes = np.nonzero(spf[2:] == np.arange(2, N + 1))[0] + 2
    column = {int(p): j for j, p in enumerate(primes)}
    E = np.zeros((N, len(primes)), dtype=np.float64)
    for n in range(2, N + 1):
        p = int(spf[n])
        E[n - 1] = E[n // p - 1]
        E[n - 1, column[p]] += 1
    E.setflags(write=False)
    return primes, E


def _check_support(N: int) -> None:
    if N < 2:
        raise DomainError(f"support N must be >= 2 (got {N})", constraint="N >= 2")


@dataclass(frozen=True, eq=False)
class SteinhausSample:
    """One draw of f on primes <= N"""

    N: int
    seed: int
    primes: np.ndarray = field(repr=False)
    angles: np.ndarray = field(repr=False)

    def prime_values(self) -> np.ndarray:
        """f(p) for p <= N"""
        return np.exp(1j * self.angles)

    def values(self) -> np.ndarray:
        """f(n) for n = 1..N"""
        _, E = _exponent_matrix(self.N)
        return np.exp(1j * (E @ self.angles))

    def __call__(self, n: int) -> complex:
        if not 1 <= n <= self.N:
            raise DomainError(f"n must lie in [1, {self.N}] (got {n})")
        return complex(self.values()[n - 1])


def _draw_angles(seed: int, count: int) -> np.ndarray:
    return np.random.default_rng(seed).uniform(0.0, TWO_PI, size=count)


def sample(N: int, seed: int) -> SteinhausSample:
    """
    Draw a Steinhaus sample on primes <= N.

    Args:
        N: Support bound >= 2
        seed: Generator seed

    Returns:
        SteinhausSample
    """
    _check_support(N)
    primes, _ = _exponent_matrix(N)
    return SteinhausSample(N=N, seed=seed, primes=primes, angles=_draw_angles(seed, len(primes)))


def model_weights(q: int, eta: int = 0, eps: Optional[float] = None) -> np.ndarray:
    """w_n = n^eta exp(-pi n^2 / q) for n up to the theta truncation length"""
    eps = settings.DEFAULT_TOL if eps is None else eps
    return ThetaRequest(q=q, x=1.0, eta=eta, eps=eps).terms()


def model_theta(q: int, f: SteinhausSample, eta: int = 0, eps: Optional[float] = None) -> complex:
    """
    sum_n f(n) n^eta exp(-pi n^2 / q), truncated as theta_value truncates.

    Raises:
        DomainError: sample support shorter than the truncation length
    """
    eps = settings.DEFAULT_TOL if eps is None else eps
    N = truncation_length(q, 1.0, eta, eps)
    if f.N < N:
        raise DomainError(
            f"sample support {f.N} is shorter than the truncation length {N}",
            constraint="N >= truncation_length(q, 1, eta, eps)",
        )
    weights = model_weights(q, eta, eps)
    return compensated_sum(f.values()[:N] * weights)


# ==================== MOMENTS ====================

def _moment_chunk(task) -> np.ndarray:
    """|model theta|^(2k) for consecutive sample indices"""
    q, k, eta, eps, N, seed, indices = task
    primes, E = _exponent_matrix(N)
    weights = model_weights(q, eta, eps)
    n_terms = len(weights)
    angles = np.vstack([_draw_angles(seed + i, len(primes)) for i in indices])
    values = np.exp(1j * (angles @ E[:n_terms].T)) @ weights
    return np.abs(values) ** (2 * k)


def _support(q: int, eta: int, eps: float) -> int:
    return max(2, truncation_length(q, 1.0, eta, eps))


def model_moment(
    q: int,
    k: int,
    samples: int,
    seed: Optional[int] = None,
    eps: Optional[float] = None,
    eta: int = 0,
    workers: int = 1,
) -> ModelMomentEstimate:
    """
    Monte-Carlo estimate of E|sum_n f(n) w_n|^(2k).

    Args:
        q: Modulus the weights are built for
        k: Moment order >= 1
        samples: Number of samples >= 100
        seed: Base seed; sample i uses seed + i
        eps: Truncation tolerance of the weights
        eta: 0 or 1
        workers: Worker processes

    Returns:
        ModelMomentEstimate, normalised by q^(k/2) (log q)^((k-1)^2)
        (q^(3k/2) when eta = 1)
    """
    seed = settings.DEFAULT_SEED if seed is None else seed
    eps = settings.DEFAULT_TOL if eps is None else eps
    if samples < MIN_MODEL_SAMPLES:
        raise DomainError(f"samples must be >= {MIN_MODEL_SAMPLES} (got {samples})",
                          constraint=f"samples >= {MIN_MODEL_SAMPLES}")
    if k < 1:
        raise DomainError(f"k must be >= 1 (got {k})", constraint="k >= 1")

    N = _support(q, eta, eps)
    chunk = settings.REDUCTION_CHUNK_SIZE
    tasks = [(q, k, eta, eps, N, seed, indices)
             for indices in split_chunks(range(samples), chunk)]
    draws = np.concatenate(parallel_map(_moment_chunk, tasks, workers=workers))

    estimate = float(chunked_sum(draws)) / samples
    standard_error = float(draws.std(ddof=1)) / math.sqrt(samples)
    group_means = [float(g.mean()) for g in np.array_split(draws, MEDIAN_OF_MEANS_GROUPS)]
    median_of_means = float(np.median(group_means))

    power = k / 2 if eta == 0 else 3 * k / 2
    normalization = q ** power * math.log(q) ** ((k - 1) ** 2)
    weights = model_weights(q, eta, eps)
    exact = float(compensated_sum(weights * weights)) if k == 1 else None

    logger.info(f"Model moment q={q} k={k}: {estimate:.6g} +/- {standard_error:.2g} ({samples} samples)")
    return ModelMomentEstimate(
        q=q,
        k=k,
        samples=samples,
        seed=seed,
        eta=eta,
        support=N,
        estimate=estimate,
        standard_error=standard_error,
        median_of_means=median_of_means,
        normalized=estimate / normalization,
        exact_second_moment=exact,
        rng=RNG_ALGORITHM,
    )


def model_scan(
    primes: Sequence[int],
    k: int,
    samples: int,
    seed: Optional[int] = None,
    eps: Optional[float] = None,
    eta: int = 0,
    workers: int = 1,
) -> List[ModelMomentEstimate]:
    """model_moment for each modulus, all sharing the base seed"""
    return [model_moment(int(q), k, samples, seed, eps, eta, workers) for q in primes]


def empirical_correlations(N: int, samples: int, seed: Optional[int] = None) -> float:
    """
    max_{m != n <= N} |mean_i f_i(m) conj f_i(n)| over samples f_i.

    Orthonormality puts this near 1/sqrt(samples).
    """
    seed = settings.DEFAULT_SEED if seed is None else seed
    _check_support(N)
    if samples < 1:
        raise DomainError(f"samples must be >= 1 (got {samples})", constraint="samples >= 1")

    primes, E = _exponent_matrix(N)
    angles = np.vstack([_draw_angles(seed + i, len(primes)) for i in range(samples)])
    F = np.exp(1j * (angles @ E.T))
    C = (F.T @ F.conj()) / samples
    np.fill_diagonal(C, 0.0)
    return float(np.abs(C).max())


__all__ = [
    "SteinhausSample",
    "sample",
    "model_weights",
    "model_theta",
    "model_moment",
    "model_scan",
    "empirical_correlations",
]
