"""
Tests for Dirichlet characters and the group transform.
"""

import cmath
import math

import numpy as np
import pytest

from src.config.constants import CharacterFamily
from src.services.characters import build_group, conductor, evaluate, gauss_sum
from src.services.numtheory import euler_phi, group_structure
from src.services.transforms import bluestein_dft, group_transform
from src.utils.exceptions import DomainError


class TestEnumeration:
    def test_prime_modulus(self):
        group = build_group(5)
        assert len(group) == 4
        assert len(group.family_indices(CharacterFamily.STAR)) == 3

    def test_single_even_primitive_mod5_is_quadratic(self, quadratic_mod5):
        group = build_group(5)
        even = group.family_indices(CharacterFamily.EVEN_PRIMITIVE_NONTRIVIAL)
        assert list(even) == [quadratic_mod5.index]

    def test_mod12_has_one_primitive(self):
        group = build_group(12)
        assert len(group) == 4
        assert [chi.conductor for chi in group].count(12) == 1

    def test_nonpositive_modulus(self):
        with pytest.raises(DomainError):
            build_group(0)

    @pytest.mark.parametrize("q", [3, 7, 16, 45, 97, 120])
    def test_parity_split(self, q):
        group = build_group(q)
        assert int((group.parities == 0).sum()) == int((group.parities == 1).sum()) == euler_phi(q) // 2


class TestValues:
    def test_trivial_character(self):
        chi = build_group(15).trivial
        assert all(chi(n) == 1 for n in (1, 2, 4, 7, 8, 11, 13, 14))
        assert chi(5) == 0

    def test_quadratic_mod5(self, quadratic_mod5):
        assert evaluate(quadratic_mod5, 2) == -1
        assert evaluate(quadratic_mod5, 4) == 1

    def test_zero_off_units(self):
        for chi in build_group(5):
            assert chi(10) == 0

    @pytest.mark.parametrize("q", [8, 21, 36])
    def test_complete_multiplicativity(self, q):
        for chi in build_group(q):
            values = chi.values()
            for m in range(q):
                for n in range(q):
                    assert abs(values[m * n % q] - values[m] * values[n]) < 1e-12

    def test_vectorised_matches_scalar(self):
        for chi in build_group(20):
            values = chi.values()
            for n in range(20):
                assert abs(values[n] - chi(n)) < 1e-14

    def test_conjugate(self):
        group = build_group(13)
        for chi in group:
            assert np.allclose(chi.conjugate().values(), np.conj(chi.values()))


class TestConductor:
    def test_trivial(self):
        assert conductor(build_group(30).trivial) == 1

    def test_quadratic_mod5(self, quadratic_mod5):
        assert conductor(quadratic_mod5) == 5

    def test_mod9_induced_from_mod3(self):
        group = build_group(9)
        quadratic = [chi for chi in group if chi.is_quadratic and not chi.is_trivial]
        assert len(quadratic) == 1
        assert quadratic[0].conductor == 3

    @pytest.mark.parametrize("q", range(1, 61))
    def test_formula_agrees_with_induced_test(self, q):
        for chi in build_group(q):
            assert chi.conductor == chi.induced_conductor()


class TestGaussSum:
    def test_odd_mod4(self):
        chi = [c for c in build_group(4) if c.is_odd][0]
        assert abs(gauss_sum(chi).value - 2j) < 1e-12

    @pytest.mark.parametrize("q", [5, 8, 11, 15, 24, 49])
    def test_primitive_modulus(self, q):
        for chi in build_group(q):
            if chi.is_primitive:
                assert abs(abs(gauss_sum(chi).value) - math.sqrt(q)) < 1e-10

    @pytest.mark.parametrize("q", [7, 13, 101])
    def test_trivial_prime(self, q):
        assert abs(gauss_sum(build_group(q).trivial).value + 1) < 1e-10


class TestOrthogonality:
    @pytest.mark.slow
    def test_rows_up_to_200(self):
        for q in range(1, 201):
            group = build_group(q)
            units = group.structure.units
            matrix = group.value_matrix()[:, units]
            gram = matrix.T @ matrix.conj()
            assert np.max(np.abs(gram - euler_phi(q) * np.eye(len(units)))) < 1e-9

    def test_small_moduli(self):
        for q in (12, 35):
            matrix = build_group(q).value_matrix()[:, group_structure(q).units]
            gram = matrix @ matrix.conj().T
            assert np.allclose(gram, len(group_structure(q).units) * np.eye(len(matrix)))


class TestTransforms:
    @pytest.mark.parametrize("n", [1, 2, 7, 12, 97, 100])
    def test_bluestein_matches_fft(self, n):
        x = np.random.default_rng(n).normal(size=n) + 1j * np.random.default_rng(n + 1).normal(size=n)
        assert np.allclose(bluestein_dft(x), np.fft.fft(x), atol=1e-10)
        assert np.allclose(bluestein_dft(x, sign=+1), n * np.fft.ifft(x), atol=1e-10)

    @pytest.mark.parametrize("q", [5, 12, 16, 45, 97])
    def test_group_transform_matches_matrix(self, q):
        group = build_group(q)
        weights = np.random.default_rng(q).normal(size=q)
        direct = group.value_matrix() @ weights
        assert np.allclose(group_transform(weights, group.structure), direct, atol=1e-10)

    def test_group_transform_leading_axes(self):
        group = build_group(21)
        weights = np.random.default_rng(3).normal(size=(2, 21))
        out = group_transform(weights, group.structure)
        assert out.shape == (2, len(group))
        assert np.allclose(out[1], group.value_matrix() @ weights[1], atol=1e-10)

    def test_phases_exact_on_quarter_turns(self):
        chi = [c for c in build_group(4) if c.is_odd][0]
        assert chi.values()[3] == -1
        assert cmath.isclose(chi(3), -1)
