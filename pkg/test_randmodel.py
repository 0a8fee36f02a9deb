"""
Tests for the Steinhaus random multiplicative model.
"""

import math

import numpy as np
import pytest

from src.services.randmodel import (
    SteinhausSample,
    empirical_correlations,
    model_moment,
    model_scan,
    model_theta,
    model_weights,
    sample,
)
from src.services.theta import truncation_length
from src.utils.exceptions import DomainError


class TestSample:
    def test_complete_multiplicativity(self):
        f = sample(50, seed=3)
        assert f(4) == pytest.approx(f(2) ** 2)
        assert f(12) == pytest.approx(f(3) * f(4))
        assert f(1) == pytest.approx(1.0)

    def test_unit_modulus(self):
        values = sample(200, seed=11).values()
        assert np.allclose(np.abs(values), 1.0)

    def test_prime_values(self):
        f = sample(30, seed=5)
        assert list(f.primes) == [2, 3, 5, 7, 11, 13, 17, 19, 23, 29]
        assert f(7) == pytest.approx(f.prime_values()[3])

    def test_deterministic(self):
        a = sample(100, seed=42)
        b = sample(100, seed=42)
        assert np.array_equal(a.angles, b.angles)
        assert not np.array_equal(a.angles, sample(100, seed=43).angles)

    def test_support(self):
        with pytest.raises(DomainError):
            sample(1, seed=0)
        with pytest.raises(DomainError):
            sample(10, seed=0)(11)


class TestModelTheta:
    def test_all_ones_sample(self):
        q = 101
        N = truncation_length(q, 1.0, 0, 1e-10)
        trivial = sample(N, seed=0)
        ones = SteinhausSample(N=N, seed=0, primes=trivial.primes, angles=np.zeros(len(trivial.primes)))
        assert model_theta(q, ones, eps=1e-10) == pytest.approx(model_weights(q, eps=1e-10).sum(), rel=1e-13)

    def test_weights(self):
        weights = model_weights(13, eta=1, eps=1e-12)
        n = np.arange(1, len(weights) + 1)
        assert np.allclose(weights, n * np.exp(-math.pi * n * n / 13))

    def test_short_support_rejected(self):
        with pytest.raises(DomainError):
            model_theta(1009, sample(5, seed=0))


class TestMoment:
    def test_second_moment_matches_exact(self):
        report = model_moment(101, 1, samples=10000, seed=1)
        assert abs(report.estimate - report.exact_second_moment) <= 3 * report.standard_error
        assert 0.9 <= report.estimate / report.exact_second_moment <= 1.1
        assert report.rng == "PCG64"
        assert report.normalized == pytest.approx(report.estimate / math.sqrt(101))

    def test_workers_do_not_change_result(self):
        serial = model_moment(53, 2, samples=2500, seed=9, workers=1)
        parallel = model_moment(53, 2, samples=2500, seed=9, workers=3)
        assert serial.estimate == parallel.estimate
        assert serial.median_of_means == parallel.median_of_means

    def test_higher_moment_has_no_exact_value(self):
        report = model_moment(29, 2, samples=200, seed=2)
        assert report.exact_second_moment is None
        assert report.normalized == pytest.approx(report.estimate / (29 * math.log(29)))

    def test_odd_weights_normalisation(self):
        report = model_moment(29, 1, samples=200, seed=2, eta=1)
        assert report.normalized == pytest.approx(report.estimate / 29 ** 1.5)

    def test_too_few_samples(self):
        with pytest.raises(DomainError):
            model_moment(101, 1, samples=99)

    def test_scan(self):
        reports = model_scan([11, 13], 1, samples=100, seed=4)
        assert [r.q for r in reports] == [11, 13]
        assert all(r.seed == 4 for r in reports)


class TestCorrelations:
    def test_near_orthonormal(self):
        samples = 4000
        assert empirical_correlations(30, samples, seed=8) < 4 / math.sqrt(samples)

    def test_invalid(self):
        with pytest.raises(DomainError):
            empirical_correlations(30, 0)
