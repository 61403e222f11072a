"""Exact integer array kernels.

Arrays are int64 while their entries stay below 2**62 and Python-int object
arrays otherwise. Products go through float64 BLAS only when every partial
sum is provably an integer below 2**53, which makes the float result exact.
"""

from __future__ import annotations

import numpy as np

_FLOAT_EXACT = 1 << 53
_INT64_SAFE = 1 << 62


def maxabs(a: np.ndarray) -> int:
    if a.size == 0:
        return 0
    return int(np.abs(a).max())


def shrink(a: np.ndarray) -> np.ndarray:
    """Return an int64 array when the values fit, else an object array."""
    if a.dtype == np.int64:
        return a
    if a.size == 0 or maxabs(a) < _INT64_SAFE:
        return a.astype(np.int64)
    return a.astype(object)


def reduce_mod(a: np.ndarray, p: int) -> np.ndarray:
    return shrink(a % p)


def _exact_float(bound: int, a: np.ndarray, b: np.ndarray) -> bool:
    return bound < _FLOAT_EXACT and a.dtype != object and b.dtype != object


def matmul(a: np.ndarray, b: np.ndarray) -> np.ndarray:
    k = a.shape[1]
    bound = maxabs(a) * maxabs(b) * max(k, 1)
    if bound == 0:
        return np.zeros((a.shape[0], b.shape[1]), dtype=np.int64)
    if _exact_float(bound, a, b):
        return (a.astype(np.float64) @ b.astype(np.float64)).astype(np.int64)
    if bound < _INT64_SAFE and a.dtype != object and b.dtype != object:
        return a @ b
    return shrink(a.astype(object) @ b.astype(object))


def kron(a: np.ndarray, b: np.ndarray) -> np.ndarray:
    bound = maxabs(a) * maxabs(b)
    if bound < _INT64_SAFE and a.dtype != object and b.dtype != object:
        return np.kron(a, b)
    return shrink(np.kron(a.astype(object), b.astype(object)))


def contract_left(f: np.ndarray, x: np.ndarray, axis: int) -> np.ndarray:
    """Apply the matrix f along one axis of the tensor x."""
    bound = maxabs(f) * maxabs(x) * max(f.shape[1], 1)
    if _exact_float(bound, f, x):
        out = np.tensordot(f.astype(np.float64), x.astype(np.float64), axes=([1], [axis]))
        out = out.astype(np.int64)
    elif bound < _INT64_SAFE and f.dtype != object and x.dtype != object:
        out = np.tensordot(f, x, axes=([1], [axis]))
    else:
        out = np.tensordot(f.astype(object), x.astype(object), axes=([1], [axis]))
    return np.moveaxis(out, 0, axis)


def contract_right(x: np.ndarray, f: np.ndarray, axis: int) -> np.ndarray:
    """Multiply x on the right by f along one of its column axes."""
    bound = maxabs(f) * maxabs(x) * max(f.shape[0], 1)
    if _exact_float(bound, f, x):
        out = np.tensordot(x.astype(np.float64), f.astype(np.float64), axes=([axis], [0]))
        out = out.astype(np.int64)
    elif bound < _INT64_SAFE and f.dtype != object and x.dtype != object:
        out = np.tensordot(x, f, axes=([axis], [0]))
    else:
        out = np.tensordot(x.astype(object), f.astype(object), axes=([axis], [0]))
    return np.moveaxis(out, -1, axis)


def scaled(a: np.ndarray, c: int) -> np.ndarray:
    if c == 1:
        return a
    if maxabs(a) * abs(c) < _INT64_SAFE and a.dtype != object:
        return a * c
    return shrink(a.astype(object) * c)


def add(a: np.ndarray, b: np.ndarray) -> np.ndarray:
    if maxabs(a) + maxabs(b) < _INT64_SAFE and a.dtype != object and b.dtype != object:
        return a + b
    return shrink(a.astype(object) + b.astype(object))
