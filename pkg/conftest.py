"""
Shared pytest fixtures and direct-summation oracles.
"""

import mpmath
import numpy as np
import pytest

from src.services.characters import build_group


@pytest.fixture
def mp():
    """mpmath at 30 significant digits, restored afterwards"""
    saved = mpmath.mp.dps
    mpmath.mp.dps = 30
    yield mpmath.mp
    mpmath.mp.dps = saved


@pytest.fixture
def output_dir(tmp_path):
    path = tmp_path / "reports"
    path.mkdir()
    return path


@pytest.fixture
def quadratic_mod5():
    group = build_group(5)
    (index,) = [i for i in range(1, len(group)) if group.quadratic_mask[i]]
    return group.character(index)


def direct_theta(chi, x=1.0, eta=None, terms=200):
    """sum_{n<=terms} chi(n) n^eta exp(-pi n^2 x / q) in mpmath"""
    eta = chi.parity if eta is None else eta
    q = chi.q
    total = mpmath.mpc(0)
    for n in range(1, terms + 1):
        value = chi(n)
        if value == 0:
            continue
        total += mpmath.mpc(value.real, value.imag) * mpmath.mpf(n) ** eta * mpmath.exp(
            -mpmath.pi * n * n * x / q
        )
    return complex(total)


def direct_l_value(chi, s):
    """L(s, chi) = q^(-s) sum_a chi(a) zeta(s, a/q) in mpmath"""
    q = chi.q
    s = mpmath.mpc(s.real, s.imag) if isinstance(s, complex) else mpmath.mpf(s)
    total = mpmath.mpc(0)
    for a in range(1, q + 1):
        value = chi(a)
        if value == 0:
            continue
        total += mpmath.mpc(value.real, value.imag) * mpmath.zeta(s, mpmath.mpf(a) / q)
    return complex(total * mpmath.power(q, -s))


def random_indices(size, count, seed=0):
    rng = np.random.default_rng(seed)
    return sorted(int(i) for i in rng.choice(size, size=min(count, size), replace=False))
