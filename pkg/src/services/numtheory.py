"""
Integer arithmetic foundation: prime sieve, von Mangoldt function,
factorization, primitive roots and discrete-log tables.
"""

import logging
import math
from dataclasses import dataclass, field
from functools import lru_cache
from typing import Dict, List, Optional, Tuple

import numpy as np

from src.utils.exceptions import DomainError

logger = logging.getLogger(__name__)


# ==================== TYPES ====================

@dataclass(frozen=True, eq=False)
class PrimeTable:
    """Primes up to `limit` with prime-power data for the von Mangoldt function."""

    limit: int
    primes: np.ndarray
    power_base: np.ndarray = field(repr=False)
    power_exponent: np.ndarray = field(repr=False)

    def prime_power(self, n: int) -> Optional[Tuple[int, int]]:
        """(p, e) when n = p^e <= limit, else None"""
        if n < 2 or n > self.limit:
            return None
        p = int(self.power_base[n])
        return (p, int(self.power_exponent[n])) if p else None

    def mangoldt(self, n: int) -> float:
        """Lambda(n)"""
        pe = self.prime_power(n)
        return math.log(pe[0]) if pe else 0.0

    @property
    def mangoldt_map(self) -> Dict[int, Tuple[int, int]]:
        """n -> (p, e) for every prime power n <= limit"""
        ns = np.nonzero(self.power_base)[0]
        return {int(n): (int(self.power_base[n]), int(self.power_exponent[n])) for n in ns}

    def mangoldt_array(self) -> np.ndarray:
        """Lambda(n) for n = 0..limit"""
        out = np.zeros(self.limit + 1, dtype=np.float64)
        mask = self.power_base > 0
        out[mask] = np.log(self.power_base[mask].astype(np.float64))
        return out

    def is_prime(self, n: int) -> bool:
        return 2 <= n <= self.limit and int(self.power_exponent[n]) == 1

    def primes_up_to(self, x: float) -> np.ndarray:
        return self.primes[: int(np.searchsorted(self.primes, x, side="right"))]

    def count(self, x: float) -> int:
        """pi(x) for x <= limit"""
        return int(np.searchsorted(self.primes, x, side="right"))


@dataclass(frozen=True)
class Factorization:
    """n = prod p^e with strictly increasing primes."""

    n: int
    factors: Tuple[Tuple[int, int], ...]

    @property
    def primes(self) -> List[int]:
        return [p for p, _ in self.factors]

    @property
    def value(self) -> int:
        out = 1
        for p, e in self.factors:
            out *= p ** e
        return out

    @property
    def is_prime(self) -> bool:
        return len(self.factors) == 1 and self.factors[0][1] == 1

    @property
    def is_prime_power(self) -> bool:
        return len(self.factors) == 1


@dataclass(frozen=True)
class CyclicComponent:
    """One cyclic factor of (Z/qZ)*.

    kind is "odd" for (Z/p^eZ)*, "two" for (Z/4Z)*, and "two_minus" /
    "two_five" for the <-1> and <5> factors of (Z/2^eZ)*, e >= 3.
    """

    generator: int
    order: int
    prime: int
    prime_power: int
    kind: str


@dataclass(frozen=True, eq=False)
class GroupStructure:
    """(Z/qZ)* as a product of cyclic components with full discrete-log tables.

    indices[i, n] is the exponent of component i in n (mod q), or -1 when
    gcd(n, q) > 1.
    """

    q: int
    components: Tuple[CyclicComponent, ...]
    indices: np.ndarray = field(repr=False)
    unit_mask: np.ndarray = field(repr=False)

    @property
    def orders(self) -> Tuple[int, ...]:
        return tuple(c.order for c in self.components)

    @property
    def generators(self) -> Tuple[int, ...]:
        return tuple(c.generator for c in self.components)

    @property
    def cyclic_components(self) -> List[Tuple[int, int]]:
        """[(generator, order), ...]"""
        return [(c.generator, c.order) for c in self.components]

    @property
    def phi(self) -> int:
        return int(np.prod(self.orders, dtype=np.int64)) if self.components else 1

    @property
    def exponent(self) -> int:
        """Group exponent lcm(orders)"""
        return math.lcm(*self.orders) if self.components else 1

    @property
    def units(self) -> np.ndarray:
        return np.nonzero(self.unit_mask)[0]

    def is_unit(self, n: int) -> bool:
        return bool(self.unit_mask[n % self.q])

    def log(self, n: int) -> Optional[Tuple[int, ...]]:
        """Exponent tuple of n, None for non-units"""
        r = n % self.q
        if not self.unit_mask[r]:
            return None
        return tuple(int(v) for v in self.indices[:, r])

    def element(self, exponents: Tuple[int, ...]) -> int:
        """prod g_i^{m_i} mod q"""
        out = 1 % self.q
        for comp, m in zip(self.components, exponents):
            out = out * pow(comp.generator, int(m) % comp.order, self.q) % self.q
        return out


# ==================== SIEVES ====================

def _prime_mask(limit: int) -> np.ndarray:
    mask = np.ones(limit + 1, dtype=bool)
    mask[:2] = False
    for p in range(2, math.isqrt(limit) + 1):
        if mask[p]:
            mask[p * p::p] = False
    return mask


def sieve(limit: int) -> PrimeTable:
    """
    Sieve of Eratosthenes with prime-power bookkeeping.

    Args:
        limit: Upper bound (>= 2)

    Returns:
        PrimeTable covering [2, limit]
    """
    if limit < 2:
        raise DomainError(f"sieve limit must be >= 2 (got {limit})", constraint="limit >= 2")

    limit = int(limit)
    primes = np.nonzero(_prime_mask(limit))[0].astype(np.int64)

    base = np.zeros(limit + 1, dtype=np.int64)
    exponent = np.zeros(limit + 1, dtype=np.int64)
    base[primes] = primes
    exponent[primes] = 1
    for p in primes[: int(np.searchsorted(primes, math.isqrt(limit), side="right"))]:
        p = int(p)
        pk, e = p * p, 2
        while pk <= limit:
            base[pk] = p
            exponent[pk] = e
            pk *= p
            e += 1

    logger.debug(f"Sieved {len(primes)} primes up to {limit}")
    return PrimeTable(limit=limit, primes=primes, power_base=base, power_exponent=exponent)


@lru_cache(maxsize=8)
def cached_sieve(limit: int) -> PrimeTable:
    """sieve() memoised per limit (tables are immutable)"""
    return sieve(limit)


def smallest_prime_factors(limit: int) -> np.ndarray:
    """spf[n] for n = 0..limit (spf[0] = spf[1] = 0)"""
    spf = np.zeros(limit + 1, dtype=np.int64)
    for p in range(2, math.isqrt(limit) + 1):
        if spf[p] == 0:
            block = spf[p * p::p]
            block[block == 0] = p
            spf[p * p::p] = block
    rest = np.nonzero(spf == 0)[0]
    rest = rest[rest >= 2]
    spf[rest] = rest
    return spf


def primes_in_range(start: int, stop: int) -> List[int]:
    """Primes p with start <= p <= stop"""
    if stop < 2:
        return []
    primes = cached_sieve(max(int(stop), 2)).primes
    return [int(p) for p in primes[primes >= start]]


# ==================== FACTORIZATION ====================

def factorize(n: int) -> Factorization:
    """
    Factor n by trial division.

    Args:
        n: Integer >= 1

    Returns:
        Factorization with increasing primes (empty for n = 1)
    """
    if n < 1:
        raise DomainError(f"factorize requires n >= 1 (got {n})", constraint="n >= 1")

    factors = []
    m = int(n)
    for p in (2, 3):
        if m % p == 0:
            e = 0
            while m % p == 0:
                m //= p
                e += 1
            factors.append((p, e))
    d = 5
    while d * d <= m:
        for p in (d, d + 2):
            if m % p == 0:
                e = 0
                while m % p == 0:
                    m //= p
                    e += 1
                factors.append((p, e))
        d += 6
    if m > 1:
        factors.append((m, 1))

    return Factorization(n=int(n), factors=tuple(factors))


def multiply(factors) -> int:
    """prod p^e over (p, e) pairs"""
    out = 1
    for p, e in factors:
        out *= int(p) ** int(e)
    return out


def euler_phi(n: int) -> int:
    out = int(n)
    for p, _ in factorize(n).factors:
        out = out // p * (p - 1)
    return out


def divisors(n: int) -> List[int]:
    """All positive divisors of n, ascending"""
    divs = [1]
    for p, e in factorize(n).factors:
        divs = [d * p ** k for d in divs for k in range(e + 1)]
    return sorted(divs)


# ==================== PRIMITIVE ROOTS & DISCRETE LOGS ====================

def primitive_root(pk: int) -> int:
    """
    Smallest generator of (Z/p^eZ)* for an odd prime power.

    Args:
        pk: p^e, p odd prime

    Returns:
        Smallest g whose order is phi(p^e)
    """
    if pk < 3 or pk % 2 == 0:
        raise DomainError(f"primitive_root requires an odd prime power (got {pk})",
                          constraint="pk = p^e, p odd prime")
    fac = factorize(pk)
    if not fac.is_prime_power:
        raise DomainError(f"primitive_root requires an odd prime power (got {pk})",
                          constraint="pk = p^e, p odd prime")

    p, e = fac.factors[0]
    phi = p ** (e - 1) * (p - 1)
    cofactors = [phi // r for r in factorize(phi).primes]
    for g in range(2, pk):
        if g % p == 0:
            continue
        if all(pow(g, c, pk) != 1 for c in cofactors):
            return g
    raise DomainError(f"no primitive root found mod {pk}")


def _power_table(g: int, order: int, modulus: int) -> np.ndarray:
    """table[g^m mod modulus] = m for m in [0, order); -1 elsewhere"""
    table = np.full(modulus, -1, dtype=np.int64)
    x = 1 % modulus
    for m in range(order):
        table[x] = m
        x = x * g % modulus
    return table


def index_table(q: int) -> np.ndarray:
    """
    Discrete logarithms base the smallest primitive root of a prime q.

    Args:
        q: Odd prime (q = 2 also accepted, trivially)

    Returns:
        Array ind of length q with g^ind[n] = n (mod q) and ind[0] = -1
    """
    if q < 2 or not factorize(q).is_prime:
        raise DomainError(
            f"index_table requires a prime modulus (got {q}); use group_structure for composite q",
            constraint="q prime",
        )
    if q == 2:
        return np.array([-1, 0], dtype=np.int64)
    return _power_table(primitive_root(q), q - 1, q)


def _crt_lift(residue: int, modulus: int, q: int) -> int:
    """x = residue mod modulus, x = 1 mod q/modulus"""
    rest = q // modulus
    if rest == 1:
        return residue % q
    # x = 1 + rest * u with 1 + rest*u = residue (mod modulus)
    u = (residue - 1) * pow(rest, -1, modulus) % modulus
    return (1 + rest * u) % q


@lru_cache(maxsize=64)
def group_structure(q: int) -> GroupStructure:
    """
    Cyclic decomposition of (Z/qZ)* via CRT over the prime powers of q.

    (Z/2Z)* contributes nothing, (Z/4Z)* = <-1>, and (Z/2^eZ)* for e >= 3 is
    <-1> x <5>; every odd p^e contributes one cyclic factor generated by its
    smallest primitive root.

    Args:
        q: Modulus >= 1

    Returns:
        GroupStructure with discrete-log tables over residues 0..q-1
    """
    if q < 1:
        raise DomainError(f"modulus must be >= 1 (got {q})", constraint="q >= 1")

    residues = np.arange(q, dtype=np.int64)
    unit_mask = np.gcd(residues, q) == 1
    components: List[CyclicComponent] = []
    rows: List[np.ndarray] = []

    for p, e in factorize(q).factors:
        pe = p ** e
        local = residues % pe
        if p == 2:
            if e == 1:
                continue
            minus_one = _crt_lift(pe - 1, pe, q)
            minus_log = np.where(local % 4 == 1, 0, 1)
            if e == 2:
                components.append(CyclicComponent(minus_one, 2, 2, pe, "two"))
                rows.append(minus_log)
                continue
            components.append(CyclicComponent(minus_one, 2, 2, pe, "two_minus"))
            rows.append(minus_log)
            five_order = pe // 4
            five_table = _power_table(5, five_order, pe)
            folded = np.where(local % 4 == 1, local, (pe - local) % pe)
            components.append(CyclicComponent(_crt_lift(5, pe, q), five_order, 2, pe, "two_five"))
            rows.append(five_table[folded])
        else:
            g = primitive_root(pe)
            order = pe // p * (p - 1)
            components.append(CyclicComponent(_crt_lift(g, pe, q), order, p, pe, "odd"))
            rows.append(_power_table(g, order, pe)[local])

    if rows:
        indices = np.vstack(rows).astype(np.int64)
        indices[:, ~unit_mask] = -1
    else:
        indices = np.zeros((0, q), dtype=np.int64)

    structure = GroupStructure(
        q=q, components=tuple(components), indices=indices, unit_mask=unit_mask
    )
    logger.debug(f"Group structure mod {q}: orders={structure.orders}")
    return structure


__all__ = [
    "PrimeTable",
    "Factorization",
    "CyclicComponent",
    "GroupStructure",
    "sieve",
    "cached_sieve",
    "smallest_prime_factors",
    "primes_in_range",
    "factorize",
    "multiply",
    "euler_phi",
    "divisors",
    "primitive_root",
    "index_table",
    "group_structure",
]
