"""
Compensated summation helpers.

Sums are reduced as a pairwise tree of error-free TwoSum transforms; the
rounding errors of every level are collected and added back at the end.
The reduction order depends only on the input length, never on the number
of worker processes.
"""

from typing import Optional, Union

import numpy as np

from src.config.settings import settings


Number = Union[float, complex]


def two_sum(u, v):
    """
    Error free transformation of a sum (works elementwise on arrays).

    Returns:
        (s, t) with s = fl(u + v) and u + v = s + t exactly
    """
    s = u + v
    up = s - v
    vpp = s - up
    up = up - u
    vpp = vpp - v
    t = -(up + vpp)
    return s, t


def _pairwise_real(x: np.ndarray) -> np.ndarray:
    """Compensated pairwise reduction of a real array along axis 0"""
    if x.shape[0] == 0:
        return np.zeros(x.shape[1:], dtype=np.float64)

    err = np.zeros(x.shape[1:], dtype=np.float64)
    while x.shape[0] > 1:
        if x.shape[0] % 2:
            x = np.concatenate([x, np.zeros_like(x[:1])], axis=0)
        x, t = two_sum(x[0::2], x[1::2])
        err = err + t.sum(axis=0)
    return x[0] + err


def compensated_sum(values, axis: int = 0):
    """
    Compensated sum of real or complex values.

    Args:
        values: Array-like of floats or complex numbers
        axis: Axis to reduce

    Returns:
        Python float/complex for 1-D input, otherwise an ndarray
    """
    arr = np.asarray(values)
    if arr.dtype.kind not in "fc":
        arr = arr.astype(np.float64)
    arr = np.moveaxis(arr, axis, 0)

    if arr.dtype.kind == "c":
        out = _pairwise_real(np.ascontiguousarray(arr.real)) + 1j * _pairwise_real(
            np.ascontiguousarray(arr.imag)
        )
    else:
        out = _pairwise_real(arr)

    if np.ndim(out) == 0:
        return complex(out) if arr.dtype.kind == "c" else float(out)
    return out


def chunked_sum(values, chunk_size: Optional[int] = None) -> Number:
    """
    Deterministic sum of a 1-D sequence in fixed-size chunks.

    Each chunk is summed with compensated_sum and the partial sums are then
    reduced the same way. Parallel producers hand their results back in
    index order, so the result is bit-identical for any worker count.

    Args:
        values: 1-D array-like
        chunk_size: Chunk length (default: settings.REDUCTION_CHUNK_SIZE)

    Returns:
        Sum as float or complex
    """
    arr = np.asarray(values).ravel()
    size = chunk_size or settings.REDUCTION_CHUNK_SIZE
    if arr.size <= size:
        return compensated_sum(arr)

    partials = [compensated_sum(arr[start:start + size]) for start in range(0, arr.size, size)]
    return compensated_sum(np.array(partials))


__all__ = ["two_sum", "compensated_sum", "chunked_sum"]
