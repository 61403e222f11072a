"""Exact Gauss-Jordan elimination over Q (fraction free) and over F_p."""

from __future__ import annotations

import math

import numpy as np

from ._intmat import shrink
from .fields import Field, RationalField


def _row_gcd(rows: np.ndarray) -> np.ndarray:
    return np.gcd.reduce(rows, axis=1)


def _rref_rational(num: np.ndarray) -> tuple[np.ndarray, int, list[int]]:
    m = np.array(num, dtype=object)
    nrows, ncols = m.shape
    pivots: list[int] = []
    r = 0
    for c in range(ncols):
        if r >= nrows:
            break
        nz = np.flatnonzero(m[r:, c] != 0)
        if nz.size == 0:
            continue
        pr = r + int(nz[0])
        if pr != r:
            m[[r, pr]] = m[[pr, r]]
        if m[r, c] < 0:
            m[r] = -m[r]
        g = math.gcd(*m[r].tolist())
        if g > 1:
            m[r] = m[r] // g
        piv = m[r, c]
        others = np.flatnonzero(m[:, c] != 0)
        others = others[others != r]
        if others.size:
            coef = m[others, c].reshape(-1, 1)
            block = m[others] * piv - coef * m[r].reshape(1, -1)
            g = _row_gcd(block).reshape(-1, 1)
            g[g == 0] = 1
            m[others] = block // g
        pivots.append(c)
        r += 1
    rank = len(pivots)
    if rank == 0:
        return np.zeros((0, ncols), dtype=np.int64), 1, pivots
    pv = [int(m[i, c]) for i, c in enumerate(pivots)]
    den = math.lcm(*pv)
    out = np.empty((rank, ncols), dtype=object)
    for i in range(rank):
        out[i] = m[i] * (den // pv[i])
    return shrink(out), den, pivots


def _rref_prime(num: np.ndarray, p: int) -> tuple[np.ndarray, int, list[int]]:
    m = np.array(num, dtype=object) % p
    nrows, ncols = m.shape
    pivots: list[int] = []
    r = 0
    for c in range(ncols):
        if r >= nrows:
            break
        nz = np.flatnonzero(m[r:, c] != 0)
        if nz.size == 0:
            continue
        pr = r + int(nz[0])
        if pr != r:
            m[[r, pr]] = m[[pr, r]]
        m[r] = (m[r] * pow(int(m[r, c]), -1, p)) % p
        others = np.flatnonzero(m[:, c] != 0)
        others = others[others != r]
        if others.size:
            coef = m[others, c].reshape(-1, 1)
            m[others] = (m[others] - coef * m[r].reshape(1, -1)) % p
        pivots.append(c)
        r += 1
    return shrink(m[: len(pivots)].copy()), 1, pivots


def rref(num: np.ndarray, field: Field) -> tuple[np.ndarray, int, list[int]]:
    """Nonzero rows of the reduced row echelon form and the pivot columns.

    Columns are scanned left to right and the pivot row is the first remaining
    row with a nonzero entry. The returned rows are encoded as (numerators,
    common denominator) over the given field.
    """
    if isinstance(field, RationalField):
        return _rref_rational(num)
    return _rref_prime(num, field.characteristic)
