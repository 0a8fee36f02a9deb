"""
Tests for the explicit bound formulas and the prime cosine sum.
"""

import math

import pytest

from src.config.constants import Regime
from src.services.bounds import (
    a_quantity,
    bound_profile,
    cos_sum_check,
    cos_sum_table,
    e_term,
    f_term,
    large_value_bound,
    max_value_shape,
    moment_shape,
    regime_for,
    regime_value,
    shifted_moment_bound,
    w_quantity,
    weak_large_value_bound,
)
from src.services.numtheory import cached_sieve, euler_phi
from src.utils.exceptions import DomainError

# log q = 100
BIG_Q = int(math.exp(100))


class TestPairKernels:
    def test_close_pair_capped_by_log_q(self):
        assert f_term(0.0, 0.005, BIG_Q) == pytest.approx(math.log(100))
        assert f_term(0.0, 0.001, BIG_Q) == pytest.approx(math.log(100))

    def test_close_pair_below_cap(self):
        assert f_term(0.0, 0.005, 10 ** 100) == pytest.approx(math.log(200))
        assert f_term(0.0, 0.01, BIG_Q) == pytest.approx(math.log(100))

    def test_coincident_shifts(self):
        assert f_term(1.0, 1.0, BIG_Q) == pytest.approx(math.log(100))
        assert e_term(1.0, 1.0, BIG_Q) == pytest.approx(10.0)

    def test_far_pair(self):
        assert f_term(0.0, 0.5, BIG_Q) == pytest.approx(math.log(math.log(100)))
        assert e_term(0.0, 0.5, BIG_Q) == pytest.approx(math.sqrt(math.log(100)))

    def test_e_close_pair(self):
        assert e_term(0.0, 0.005, BIG_Q) == pytest.approx(10.0)
        assert e_term(0.0, 0.005, 10 ** 100) == pytest.approx(math.sqrt(200))

    def test_small_modulus_rejected(self):
        with pytest.raises(DomainError):
            f_term(0.0, 1.0, 16)
        with pytest.raises(DomainError):
            e_term(0.0, 1.0, 15)


class TestW:
    def test_coincident_pair(self):
        q = 1009
        assert w_quantity([0.0, 0.0], q) == pytest.approx(4 * math.log(math.log(q)))

    def test_far_pairs(self):
        q = 10007
        lll = math.log(math.log(math.log(q)))
        expected = 4 * math.log(math.log(q)) + 2 * 6 * lll
        assert w_quantity([0.0, 1.0, 2.0, 3.0], q) == pytest.approx(expected)

    def test_order_of_shifts_irrelevant(self):
        assert w_quantity([3.0, 0.0, 0.002, 1.0], 10007) == pytest.approx(
            w_quantity([0.0, 0.002, 1.0, 3.0], 10007)
        )


class TestA:
    def test_regime_values(self):
        W, k = 100.0, 1
        assert a_quantity(10.0, W, k) == pytest.approx(math.log(W) / 2)
        assert a_quantity(110.0, W, k) == pytest.approx(W * math.log(W) / 220)
        assert a_quantity(1000.0, W, k) == 2.0

    @pytest.mark.parametrize("W,k", [(100.0, 1), (5000.0, 2), (2e5, 3)])
    def test_continuous_at_knots(self, W, k):
        for knot in (W, W * math.log(W) / (4 * k)):
            below = a_quantity(knot * (1 - 1e-12), W, k)
            above = a_quantity(knot * (1 + 1e-12), W, k)
            assert below == pytest.approx(above, rel=1e-9)

    def test_domain(self):
        with pytest.raises(DomainError):
            a_quantity(0.0, 20.0, 1)
        with pytest.raises(DomainError):
            a_quantity(1.0, 2.0, 1)


class TestLargeValueBound:
    def test_regimes(self):
        W = 100.0
        assert regime_for(10.0, W, 1) is Regime.I
        assert regime_for(W, W, 1) is Regime.I
        assert regime_for(W + 1, W, 1) is Regime.II
        assert regime_for(1e4, W, 1) is Regime.III

    def test_regimes_agree_at_boundary(self):
        q, k = 10007, 2
        W = w_quantity([0.0, 0.5, 1.0, 1.5], q)
        first = regime_value(Regime.I, q, W, W, k)
        second = regime_value(Regime.II, q, W, W, k)
        assert abs(first - second) <= 1e-12 * abs(first)

    def test_third_regime(self):
        q, W, k, V = 1009, 10.0, 1, 500.0
        bound = large_value_bound(q, V, W, k)
        assert bound.regime is Regime.III
        assert bound.value == pytest.approx(euler_phi(q) * math.exp(-(V / 801) * math.log(V)))

    def test_positive(self):
        q, k = 10007, 1
        W = w_quantity([0.0, 0.0], q)
        for V in (6.5, W, 2 * W, 100.0, 1e4):
            assert large_value_bound(q, V, W, k).value > 0

    def test_level_below_floor(self):
        with pytest.raises(DomainError):
            large_value_bound(1009, 1.0, 10.0, 1)

    def test_weak_shape(self):
        q, W = 1009, 10.0
        assert weak_large_value_bound(q, 5.0, W) == pytest.approx(euler_phi(q) * math.exp(-2.5))
        assert weak_large_value_bound(q, 300.0, 1.0) == pytest.approx(euler_phi(q) * math.exp(-600.0))
        assert moment_shape(q, W) == pytest.approx(euler_phi(q) * math.exp(2.5))
        with pytest.raises(DomainError):
            weak_large_value_bound(q, 2.0, W)


class TestMomentBound:
    def test_second_moment_shape(self):
        q = 1009
        bound = shifted_moment_bound(q, [0.0, 0.0], epsilon=0.0)
        assert bound == pytest.approx(euler_phi(q) * math.log(q))

    def test_far_pairs(self):
        q = 10007
        log_q = math.log(q)
        bound = shifted_moment_bound(q, [0.0, 1.0, 2.0, 3.0], epsilon=0.0)
        assert bound == pytest.approx(euler_phi(q) * log_q * math.log(log_q) ** 3)

    def test_shrinks_with_separation(self):
        q = 10007
        close = shifted_moment_bound(q, [0.0, 0.001])
        far = shifted_moment_bound(q, [0.0, 1.0])
        assert far < close

    def test_max_value_shape_monotone(self):
        assert max_value_shape(1009, 0.0) < max_value_shape(10007, 0.0)
        assert max_value_shape(1009, 0.5) == max_value_shape(1009, 0.0)
        assert max_value_shape(1009, 100.0) > max_value_shape(1009, 10.0)


class TestProfile:
    def test_consistent(self):
        profile = bound_profile(1009, [0.0, 0.001, 1.0, 2.0], V=20.0)
        assert profile.k == 2
        assert len(profile.pairs) == 6
        assert profile.pairs[0].close and not profile.pairs[1].close
        assert profile.W == pytest.approx(w_quantity([0.0, 0.001, 1.0, 2.0], 1009))
        assert profile.A == pytest.approx(a_quantity(20.0, profile.W, 2))
        assert profile.regime.regime is regime_for(20.0, profile.W, 2)

    def test_without_level(self):
        profile = bound_profile(101, [0.0, 0.0])
        assert profile.A is None and profile.regime is None

    def test_small_modulus(self):
        with pytest.raises(DomainError):
            bound_profile(13, [0.0, 0.0])


class TestCosSum:
    def test_zero_frequency(self):
        check = cos_sum_check(100, 0.0)
        primes = cached_sieve(100).primes
        assert check.lhs == pytest.approx(sum(1 / p for p in primes))
        assert check.rhs == pytest.approx(math.log(math.log(100)))
        assert check.regime == "close"

    def test_lhs_below_reciprocal_sum(self):
        for check in cos_sum_table(1e4, [0.0, 0.3, 2.0, 50.0]):
            assert check.lhs <= cos_sum_check(1e4, 0.0).lhs + 1e-12

    def test_far_regime(self):
        check = cos_sum_check(1000, 2.0)
        assert check.regime == "far"
        assert check.rhs == pytest.approx(math.log(math.log(4.0)))

    def test_cut_off(self):
        with pytest.raises(DomainError):
            cos_sum_check(2, 0.0)

    @pytest.mark.slow
    def test_margins_bounded(self):
        for check in cos_sum_table(1e6, [0.0, 0.01, 0.1, 1.0, 2.0, 10.0]):
            assert abs(check.margin) <= 5.0

    @pytest.mark.slow
    def test_zero_frequency_margin_settles(self):
        margins = [cos_sum_check(z, 0.0).margin for z in (1e5, 3e5, 1e6)]
        for previous, current in zip(margins, margins[1:]):
            assert abs(current - previous) < 0.02
        # Meissel-Mertens constant
        assert margins[-1] == pytest.approx(0.2614972128, abs=5e-3)
