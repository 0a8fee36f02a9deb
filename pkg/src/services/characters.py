"""
Dirichlet characters mod q.

A character is an exponent tuple (j_1, ..., j_r) against the cyclic
components (g_i, n_i) of (Z/qZ)*: chi(g_i) = e(j_i / n_i). Values are kept as
integer exponents over the group exponent L = lcm(n_i) and only turned into
complex numbers on demand. Characters are numbered in mixed radix over the
component orders (C order), so the trivial character has index 0.
"""

import logging
import math
from dataclasses import dataclass, field
from functools import lru_cache
from typing import Iterator, Optional, Tuple

import numpy as np

from src.config.constants import CharacterFamily
from src.services.numtheory import GroupStructure, divisors, group_structure
from src.services.specfun import ComplexApprox, EPS
from src.utils.exceptions import DomainError
from src.utils.summation import compensated_sum

logger = logging.getLogger(__name__)

_QUARTER_TURNS = np.array([1.0 + 0.0j, 1.0j, -1.0 + 0.0j, -1.0j])


def roots_of_unity(exponents: np.ndarray, modulus: int) -> np.ndarray:
    """
    e(E / modulus) for integer exponents; -1 marks a zero value.

    Multiples of a quarter turn are returned exactly.
    """
    exponents = np.asarray(exponents, dtype=np.int64)
    zero = exponents < 0
    e = np.where(zero, 0, exponents) % modulus
    out = np.exp(2j * np.pi * (e / modulus))
    quarter = (4 * e) % modulus == 0
    if np.any(quarter):
        out[quarter] = _QUARTER_TURNS[(4 * e[quarter]) // modulus]
    out[zero] = 0.0
    return out


# ==================== CHARACTER ====================

@dataclass(frozen=True, eq=False)
class Character:
    """One Dirichlet character; equality is by (q, index)."""

    group: "CharacterGroup" = field(repr=False)
    index: int
    exponents: Tuple[int, ...]
    parity: int
    conductor: int

    def __eq__(self, other) -> bool:
        return isinstance(other, Character) and (self.q, self.index) == (other.q, other.index)

    def __hash__(self) -> int:
        return hash((self.q, self.index))

    @property
    def q(self) -> int:
        return self.group.q

    @property
    def eta(self) -> int:
        """Theta exponent eta_chi (0 even, 1 odd)"""
        return self.parity

    @property
    def is_even(self) -> bool:
        return self.parity == 0

    @property
    def is_odd(self) -> bool:
        return self.parity == 1

    @property
    def is_trivial(self) -> bool:
        return self.index == 0

    @property
    def is_primitive(self) -> bool:
        return self.conductor == self.q

    @property
    def is_quadratic(self) -> bool:
        """chi^2 = chi_0 (the trivial character counts)"""
        return bool(self.group.quadratic_mask[self.index])

    @property
    def order(self) -> int:
        orders = [n // math.gcd(j, n) for j, n in zip(self.exponents, self.group.orders)]
        return math.lcm(*orders) if orders else 1

    def exponent_values(self) -> np.ndarray:
        """Exponent of chi(n) over L for n = 0..q-1; -1 where gcd(n, q) > 1"""
        return self.group.exponent_table(self.index)

    def values(self) -> np.ndarray:
        """chi(n) for n = 0..q-1 as complex numbers"""
        return roots_of_unity(self.exponent_values(), self.group.exponent)

    def log_value(self, n: int) -> Optional[int]:
        """Exponent E with chi(n) = e(E / L), None when chi(n) = 0"""
        exps = self.group.structure.log(n)
        if exps is None:
            return None
        L = self.group.exponent
        return sum((j * m % order) * (L // order)
                   for j, m, order in zip(self.exponents, exps, self.group.orders)) % L

    def __call__(self, n: int) -> complex:
        e = self.log_value(n)
        if e is None:
            return 0j
        return complex(roots_of_unity(np.array([e]), self.group.exponent)[0])

    def conjugate(self) -> "Character":
        return self.group.character(self.group.conjugate_index(self.index))

    def induced_conductor(self) -> int:
        """
        Smallest f | q such that chi is trivial on units n = 1 (mod f),
        i.e. chi is induced from a character mod f.
        """
        exps = self.exponent_values()
        residues = np.arange(self.q)
        units = exps >= 0
        for f in divisors(self.q):
            mask = units & (residues % f == 1 % f)
            if np.all(exps[mask] == 0):
                return f
        return self.q


# ==================== GROUP ====================

class CharacterGroup:
    """All phi(q) characters mod q with vectorised parity and conductor tables."""

    def __init__(self, structure: GroupStructure):
        self.structure = structure
        self.q = structure.q
        self.orders = structure.orders
        self.exponent = structure.exponent
        self.size = structure.phi

        grid = np.unravel_index(np.arange(self.size), self.orders) if self.orders else ()
        self.exponent_grid = (
            np.stack(grid, axis=1).astype(np.int64) if self.orders
            else np.zeros((1, 0), dtype=np.int64)
        )
        self.parities = self._compute_parities()
        self.conductors = self._compute_conductors()
        if self.orders:
            orders = np.array(self.orders, dtype=np.int64)
            self.quadratic_mask = np.all((2 * self.exponent_grid) % orders == 0, axis=1)
        else:
            self.quadratic_mask = np.ones(1, dtype=bool)
        self.primitive_mask = self.conductors == self.q

    # ---------- tables ----------

    def _compute_parities(self) -> np.ndarray:
        if not self.orders:
            return np.zeros(1, dtype=np.int64)
        minus_one = self.structure.indices[:, (self.q - 1) % self.q]
        L = self.exponent
        acc = np.zeros(self.size, dtype=np.int64)
        for i, n in enumerate(self.orders):
            acc += (self.exponent_grid[:, i] * int(minus_one[i]) % n) * (L // n)
        acc %= L
        return (acc != 0).astype(np.int64)

    def _compute_conductors(self) -> np.ndarray:
        cond = np.ones(self.size, dtype=np.int64)
        two_minus = two_five = None

        for i, comp in enumerate(self.structure.components):
            j = self.exponent_grid[:, i]
            if comp.kind == "odd":
                order = comp.order // np.gcd(j, comp.order)
                v = np.zeros(self.size, dtype=np.int64)
                rest = order.copy()
                while True:
                    mask = (rest % comp.prime == 0) & (rest > 1)
                    if not np.any(mask):
                        break
                    v[mask] += 1
                    rest[mask] //= comp.prime
                cond *= np.where(order > 1, comp.prime ** (1 + v), 1)
            elif comp.kind == "two":
                cond *= np.where(j % 2 == 1, 4, 1)
            elif comp.kind == "two_minus":
                two_minus = j
            elif comp.kind == "two_five":
                two_five = (j, comp.order)

        if two_five is not None:
            j5, n5 = two_five
            order5 = n5 // np.gcd(j5, n5)
            v5 = np.round(np.log2(order5)).astype(np.int64)
            local = np.where(order5 > 1, 2 ** (v5 + 2), np.where(two_minus % 2 == 1, 4, 1))
            cond *= local

        return cond

    def exponent_table(self, index: int) -> np.ndarray:
        """Exponents of chi_index(n) over L for n = 0..q-1 (-1 off units)"""
        exps = self.exponent_grid[index]
        L = self.exponent
        out = np.zeros(self.q, dtype=np.int64)
        for i, n in enumerate(self.orders):
            out += (int(exps[i]) * self.structure.indices[i] % n) * (L // n)
        out %= max(L, 1)
        out[~self.structure.unit_mask] = -1
        return out

    # ---------- access ----------

    def __len__(self) -> int:
        return self.size

    def __iter__(self) -> Iterator[Character]:
        for index in range(self.size):
            yield self.character(index)

    def character(self, index: int) -> Character:
        if not 0 <= index < self.size:
            raise DomainError(f"character index {index} out of range for q={self.q}")
        return Character(
            group=self,
            index=int(index),
            exponents=tuple(int(j) for j in self.exponent_grid[index]),
            parity=int(self.parities[index]),
            conductor=int(self.conductors[index]),
        )

    def index_of(self, exponents) -> int:
        if not self.orders:
            return 0
        exps = tuple(int(j) % n for j, n in zip(exponents, self.orders))
        return int(np.ravel_multi_index(exps, self.orders))

    @property
    def trivial(self) -> Character:
        return self.character(0)

    def conjugate_index(self, index: int) -> int:
        return self.index_of(tuple(-int(j) for j in self.exponent_grid[index]))

    def conjugate_indices(self) -> np.ndarray:
        """Index of conj(chi) for every chi"""
        if not self.orders:
            return np.zeros(1, dtype=np.int64)
        neg = (-self.exponent_grid) % np.array(self.orders, dtype=np.int64)
        return np.ravel_multi_index(tuple(neg.T), self.orders).astype(np.int64)

    def family_indices(self, family) -> np.ndarray:
        """Character indices of a family, ascending"""
        family = CharacterFamily(family)
        nontrivial = np.arange(self.size) != 0
        if family is CharacterFamily.STAR:
            mask = self.primitive_mask
        elif family is CharacterFamily.EVEN_PRIMITIVE_NONTRIVIAL:
            mask = self.primitive_mask & (self.parities == 0) & nontrivial
        elif family is CharacterFamily.ODD_PRIMITIVE:
            mask = self.primitive_mask & (self.parities == 1)
        elif family is CharacterFamily.NONQUADRATIC:
            mask = ~self.quadratic_mask
        else:
            mask = self.primitive_mask & ~self.quadratic_mask
        return np.nonzero(mask)[0]

    def value_matrix(self, indices=None) -> np.ndarray:
        """chi(n) for the selected characters (rows) and n = 0..q-1 (columns)"""
        indices = np.arange(self.size) if indices is None else np.asarray(indices)
        return np.vstack([roots_of_unity(self.exponent_table(int(i)), self.exponent)
                          for i in indices]) if len(indices) else np.zeros((0, self.q), complex)

    def counts(self) -> dict:
        return {
            "q": self.q,
            "characters": self.size,
            "primitive": int(self.primitive_mask.sum()),
            "even": int((self.parities == 0).sum()),
            "odd": int((self.parities == 1).sum()),
        }


# ==================== OPERATIONS ====================

@lru_cache(maxsize=32)
def build_group(q: int) -> CharacterGroup:
    """
    Build the character group mod q.

    Args:
        q: Modulus >= 1

    Returns:
        CharacterGroup (cached per q; immutable)
    """
    if q < 1:
        raise DomainError(f"modulus must be >= 1 (got {q})", constraint="q >= 1")
    group = CharacterGroup(group_structure(int(q)))
    logger.debug(f"Character group mod {q}: {group.counts()}")
    return group


def evaluate(chi: Character, n: int) -> complex:
    """chi(n); zero when gcd(n, q) > 1"""
    return chi(n)


def conductor(chi: Character) -> int:
    """Smallest modulus inducing chi"""
    return chi.conductor


def gauss_sum(chi: Character) -> ComplexApprox:
    """
    tau(chi) = sum_{a mod q} chi(a) e(a/q).

    Phases are combined as exact integers before the single complex
    exponential per term.
    """
    q, L = chi.q, chi.group.exponent
    exps = chi.exponent_values()
    a = np.arange(q, dtype=np.int64)
    units = exps >= 0
    numer = (exps[units] * q + a[units] * L) % (L * q)
    terms = np.exp(2j * np.pi * (numer / (L * q)))
    value = compensated_sum(terms) if terms.size else 0j
    return ComplexApprox(value, 8.0 * EPS * max(terms.size, 1))


__all__ = [
    "Character",
    "CharacterGroup",
    "roots_of_unity",
    "build_group",
    "evaluate",
    "conductor",
    "gauss_sum",
]
