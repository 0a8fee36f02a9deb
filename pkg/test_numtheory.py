"""
Tests for the integer arithmetic layer.
"""

import math

import numpy as np
import pytest

from src.services.numtheory import (
    cached_sieve,
    divisors,
    euler_phi,
    factorize,
    group_structure,
    index_table,
    multiply,
    primes_in_range,
    primitive_root,
    sieve,
    smallest_prime_factors,
)
from src.utils.exceptions import DomainError


def _trial_division_is_prime(n):
    return n >= 2 and all(n % d for d in range(2, math.isqrt(n) + 1))


class TestSieve:
    def test_small_limit(self):
        assert list(sieve(10).primes) == [2, 3, 5, 7]

    def test_prime_count_matches_trial_division(self):
        table = sieve(100)
        assert table.count(100) == 25
        assert table.count(100) == sum(_trial_division_is_prime(n) for n in range(101))

    def test_mangoldt(self):
        table = sieve(100)
        assert table.mangoldt(8) == pytest.approx(math.log(2))
        assert table.mangoldt(49) == pytest.approx(math.log(7))
        assert table.mangoldt(12) == 0.0
        assert table.mangoldt(1) == 0.0
        assert table.prime_power(27) == (3, 3)

    def test_mangoldt_array_sums_to_chebyshev(self):
        table = sieve(50)
        psi = sum(math.log(p) * int(math.log(50) / math.log(p)) for p in table.primes)
        assert table.mangoldt_array().sum() == pytest.approx(psi)

    def test_mangoldt_divisor_sum_is_log(self):
        table = sieve(2000)
        for n in range(1, 2001):
            total = math.fsum(table.mangoldt(d) for d in divisors(n))
            assert total == pytest.approx(math.log(n), abs=1e-12)

    def test_limit_below_two_rejected(self):
        with pytest.raises(DomainError):
            sieve(1)

    def test_primes_in_range(self):
        assert primes_in_range(10, 30) == [11, 13, 17, 19, 23, 29]
        assert primes_in_range(0, 1) == []

    def test_cached_sieve_is_shared(self):
        assert cached_sieve(200) is cached_sieve(200)

    def test_smallest_prime_factors(self):
        spf = smallest_prime_factors(30)
        assert spf[12] == 2 and spf[15] == 3 and spf[29] == 29 and spf[25] == 5


class TestFactorization:
    def test_composite(self):
        assert factorize(12).factors == ((2, 2), (3, 1))

    def test_unit(self):
        assert factorize(1).factors == ()

    def test_prime(self):
        fac = factorize(10007)
        assert fac.is_prime
        assert _trial_division_is_prime(10007)

    def test_round_trip_value(self):
        for n in (360, 9973 * 4, 2 ** 10 * 3 ** 4):
            assert multiply(factorize(n).factors) == n

    def test_phi_and_divisors(self):
        assert euler_phi(100) == 40
        assert euler_phi(1) == 1
        assert divisors(12) == [1, 2, 3, 4, 6, 12]

    def test_nonpositive_rejected(self):
        with pytest.raises(DomainError):
            factorize(0)


class TestPrimitiveRoots:
    @pytest.mark.parametrize("p,g", [(3, 2), (5, 2), (7, 3), (23, 5)])
    def test_smallest_root(self, p, g):
        assert primitive_root(p) == g

    def test_root_has_full_order(self):
        g = primitive_root(41)
        orders = [m for m in range(1, 41) if pow(g, m, 41) == 1]
        assert orders[0] == 40

    def test_even_modulus_rejected(self):
        with pytest.raises(DomainError):
            primitive_root(8)

    def test_index_table(self):
        ind = index_table(5)
        assert ind[4] == 2
        assert ind[1] == 0
        assert ind[0] == -1

    def test_index_table_is_bijection(self):
        ind = index_table(101)
        assert sorted(ind[1:]) == list(range(100))

    def test_index_table_rejects_composite(self):
        with pytest.raises(DomainError):
            index_table(15)


class TestGroupStructure:
    @pytest.mark.parametrize("q", [1, 2, 4, 8, 9, 12, 15, 16, 24, 35, 40, 63, 100])
    def test_phi_and_logs(self, q):
        structure = group_structure(q)
        assert structure.phi == euler_phi(q)
        for n in structure.units:
            assert structure.element(structure.log(int(n))) == n % q

    @pytest.mark.parametrize("q", range(3, 102))
    def test_logs_are_additive(self, q):
        structure = group_structure(q)
        units = [int(n) for n in structure.units[:20]]
        for m in units:
            for n in units:
                expected = tuple((a + b) % order for a, b, order in
                                 zip(structure.log(m), structure.log(n), structure.orders))
                assert structure.log(m * n) == expected

    def test_power_of_two_components(self):
        assert group_structure(4).orders == (2,)
        assert group_structure(16).orders == (2, 4)
        assert group_structure(2).orders == ()

    def test_non_units_marked(self):
        structure = group_structure(12)
        assert structure.log(6) is None
        assert np.all(structure.indices[:, 3] == -1)
