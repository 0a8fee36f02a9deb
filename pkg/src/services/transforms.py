"""
Fast transforms over (Z/qZ)*.

bluestein_dft handles arbitrary lengths with one power-of-two convolution;
group_transform turns residue weights into the character sums
sum_{a unit} chi(a) w[a] for every character at once.
"""

import logging

import numpy as np

from src.services.numtheory import GroupStructure
from src.utils.exceptions import DomainError

logger = logging.getLogger(__name__)


def _chirp(n: int, sign: int) -> np.ndarray:
    """exp(sign * pi i k^2 / n) with k^2 reduced mod 2n in integers"""
    k = np.arange(n, dtype=np.int64)
    phase = (k * k) % (2 * n)
    return np.exp(sign * 1j * np.pi * (phase / n))


def bluestein_dft(x, sign: int = -1, axis: int = -1) -> np.ndarray:
    """
    X_k = sum_n x_n exp(sign * 2 pi i n k / N) for any length N.

    Uses n k = (n^2 + k^2 - (k - n)^2) / 2, so the transform becomes a
    linear convolution with a chirp, done by power-of-two FFTs.

    Args:
        x: Input array
        sign: -1 (forward) or +1 (unnormalised inverse)
        axis: Axis to transform

    Returns:
        Complex array of the same shape
    """
    if sign not in (-1, 1):
        raise DomainError(f"sign must be -1 or +1 (got {sign})", constraint="sign in {-1, 1}")

    x = np.moveaxis(np.asarray(x, dtype=np.complex128), axis, -1)
    n = x.shape[-1]
    if n <= 1:
        return np.moveaxis(x.copy(), -1, axis)

    m = 1 << int(2 * n - 1 - 1).bit_length()
    chirp = _chirp(n, sign)

    a = np.zeros(x.shape[:-1] + (m,), dtype=np.complex128)
    a[..., :n] = x * chirp

    b = np.zeros(m, dtype=np.complex128)
    b[:n] = np.conj(chirp)
    b[m - n + 1:] = np.conj(chirp[1:][::-1])

    conv = np.fft.ifft(np.fft.fft(a, axis=-1) * np.fft.fft(b), axis=-1)
    out = conv[..., :n] * chirp
    return np.moveaxis(out, -1, axis)


def group_transform(residue_weights, structure: GroupStructure) -> np.ndarray:
    """
    Character sums for all characters mod q.

    The weights of the units are scattered into a tensor indexed by the
    discrete-log exponents (m_1, ..., m_r); a sign +1 DFT along every axis
    then gives sum_m T[m] e(sum_i j_i m_i / n_i) at (j_1, ..., j_r), and the
    C-order ravel matches the character index.

    Args:
        residue_weights: Array of length q (entries off units are ignored);
            extra leading axes are transformed independently
        structure: GroupStructure of the modulus

    Returns:
        Complex array with last axis of length phi(q), indexed like
        CharacterGroup characters
    """
    w = np.asarray(residue_weights)
    q = structure.q
    if w.shape[-1] != q:
        raise DomainError(f"expected {q} residue weights (got {w.shape[-1]})")

    units = structure.units
    lead = w.shape[:-1]
    if not structure.components:
        return w[..., units].sum(axis=-1, keepdims=True).astype(np.complex128)

    orders = structure.orders
    tensor = np.zeros(lead + orders, dtype=np.complex128)
    position = tuple(structure.indices[:, units])
    tensor[(Ellipsis,) + position] = w[..., units]

    offset = len(lead)
    for axis in range(len(orders)):
        tensor = bluestein_dft(tensor, sign=1, axis=offset + axis)

    return tensor.reshape(lead + (structure.phi,))


__all__ = ["bluestein_dft", "group_transform"]
