"""Dense exact linear algebra over a prime field.

Matrices are numpy int64 arrays with entries reduced into 0..p-1.  Row
reduction is vectorized one pivot at a time; inverses use Fermat's little
theorem, so ``p`` must be prime.
"""

from __future__ import annotations

import numpy as np


def check_prime(p: int) -> int:
    if p < 2 or any(p % d == 0 for d in range(2, int(p**0.5) + 1)):
        raise ValueError(f"characteristic must be prime, got {p}")
    return p


def as_matrix(rows, width: int, p: int) -> np.ndarray:
    rows = list(rows)
    if not rows:
        return np.zeros((0, width), dtype=np.int64)
    return np.array(rows, dtype=np.int64).reshape(len(rows), width) % p


def rref(matrix: np.ndarray, p: int) -> tuple[np.ndarray, tuple[int, ...]]:
    """Reduced row echelon form; returns (nonzero rows, pivot columns)."""
    m = np.array(matrix, dtype=np.int64) % p
    nrows, ncols = m.shape
    pivots = []
    r = 0
    for c in range(ncols):
        if r == nrows:
            break
        nz = np.nonzero(m[r:, c])[0]
        if nz.size == 0:
            continue
        pr = r + int(nz[0])
        if pr != r:
            m[[r, pr]] = m[[pr, r]]
        inv = pow(int(m[r, c]), p - 2, p)
        m[r] = m[r] * inv % p
        factors = m[:, c].copy()
        factors[r] = 0
        m = (m - np.outer(factors, m[r])) % p
        pivots.append(c)
        r += 1
    return m[:r], tuple(pivots)


def echelon_pivots(matrix: np.ndarray, p: int) -> tuple[int, ...]:
    """Pivot columns of a (non-reduced) echelon form, scanning left to right."""
    m = np.array(matrix, dtype=np.int64) % p
    nrows, ncols = m.shape
    pivots = []
    r = 0
    for c in range(ncols):
        if r == nrows:
            break
        nz = np.nonzero(m[r:, c])[0]
        if nz.size == 0:
            continue
        pr = r + int(nz[0])
        if pr != r:
            m[[r, pr]] = m[[pr, r]]
        inv = pow(int(m[r, c]), p - 2, p)
        below = m[r + 1 :, c]
        if below.size:
            m[r + 1 :] = (m[r + 1 :] - np.outer(below * inv % p, m[r])) % p
        pivots.append(c)
        r += 1
    return tuple(pivots)


def rank(matrix: np.ndarray, p: int) -> int:
    if matrix.size == 0:
        return 0
    return len(echelon_pivots(matrix, p))


def reduce_vector(v: np.ndarray, basis: np.ndarray, pivots, p: int) -> np.ndarray:
    """Remainder of ``v`` against RREF ``basis``; zero iff v lies in the span."""
    v = np.array(v, dtype=np.int64) % p
    for row, c in zip(basis, pivots):
        if v[c]:
            v = (v - v[c] * row) % p
    return v


def in_span(v: np.ndarray, basis: np.ndarray, pivots, p: int) -> bool:
    return not reduce_vector(v, basis, pivots, p).any()
