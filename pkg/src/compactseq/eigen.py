"""Extreme eigenpairs of symmetric tridiagonal matrices.

The matrices handled here have an arbitrary real diagonal and a constant
real off-diagonal.  The smallest eigenvalue is located by Sturm-sequence
bisection: the number of negative pivots of the shifted LDL^T recurrence

    p_1 = d_1 - s,    p_i = d_i - s - b^2 / p_{i-1}

equals the number of eigenvalues below the shift s, so the minimum can be
bracketed to any width inside the Gershgorin interval.  The eigenvector
then comes from inverse iteration with the shift placed strictly below
the bracket.  With the off-diagonal oriented negative (a similarity flip
of alternate signs, which leaves eigenvalues alone), the shifted matrix
is an M-matrix: Thomas elimination meets no cancellation and the iterates
stay entrywise positive in floating point, which pins the sign of the
returned ground state instead of leaving it to roundoff.
"""

from __future__ import annotations

from dataclasses import dataclass

import numpy as np

__all__ = [
    "EigenPair",
    "EigenConvergenceError",
    "eigenvalue_count",
    "min_eigenvalue",
    "kth_eigenvalue",
    "min_eigenpair",
]

_MAX_BISECT = 300


class EigenConvergenceError(RuntimeError):
    """Inverse iteration failed to reach the residual target."""


@dataclass(frozen=True)
class EigenPair:
    """Eigenvalue/eigenvector pair with its 2-norm residual."""

    value: float
    vector: np.ndarray
    residual: float
    iterations: int


def _count_below(d, b2, shift):
    """Eigenvalues of tridiag(d, b) strictly below ``shift`` (Sturm count)."""
    count = 0
    piv = d[0] - shift
    if piv == 0.0:
        piv = -1e-290
    if piv < 0.0:
        count = 1
    for i in range(1, len(d)):
        piv = d[i] - shift - b2 / piv
        if piv == 0.0:
            piv = -1e-290
        if piv < 0.0:
            count += 1
    return count


def eigenvalue_count(diag, offdiag, shift) -> int:
    """Number of eigenvalues strictly below ``shift``."""
    d = [float(v) for v in diag]
    b = float(offdiag)
    if b == 0.0:
        return sum(1 for v in d if v < shift)
    return _count_below(d, b * b, float(shift))


def _bisect_kth(d, b, k, tol):
    """Bracket the k-th smallest eigenvalue (0-based) to width <= tol."""
    b2 = b * b
    r = 2.0 * abs(b)
    lo = min(d) - r
    hi = max(d) + r
    pad = 1e-12 * max(1.0, abs(lo), abs(hi))
    lo -= pad
    hi += pad
    for _ in range(_MAX_BISECT):
        if hi - lo <= tol:
            break
        mid = 0.5 * (lo + hi)
        if mid <= lo or mid >= hi:
            break
        if _count_below(d, b2, mid) >= k + 1:
            hi = mid
        else:
            lo = mid
    return lo, hi


def min_eigenvalue(diag, offdiag, tol: float = 1e-12) -> float:
    """Smallest eigenvalue of tridiag(diag, offdiag) to absolute width tol."""
    d = [float(v) for v in diag]
    if float(offdiag) == 0.0 or len(d) == 1:
        return min(d)
    lo, hi = _bisect_kth(d, float(offdiag), 0, tol)
    return 0.5 * (lo + hi)


def kth_eigenvalue(diag, offdiag, k: int, tol: float = 1e-12) -> float:
    """k-th smallest eigenvalue (k = 0 is the minimum)."""
    d = [float(v) for v in diag]
    n = len(d)
    if not 0 <= k < n:
        raise ValueError(f"k must be in [0, {n})")
    if float(offdiag) == 0.0 or n == 1:
        return sorted(d)[k]
    lo, hi = _bisect_kth(d, float(offdiag), k, tol)
    return 0.5 * (lo + hi)


def _apply(darr, off, v):
    out = darr * v
    out[:-1] += off * v[1:]
    out[1:] += off * v[:-1]
    return out


def min_eigenpair(diag, offdiag, tol: float = 1e-12, max_iter: int = 50) -> EigenPair:
    """Smallest eigenvalue and unit eigenvector.

    The vector's sign is canonicalized so its center entry is positive;
    for a negative off-diagonal the whole ground state is then entrywise
    positive.  Raises :class:`EigenConvergenceError` if inverse iteration
    cannot meet the residual contract ``1e-10 * (1 + |value|)`` within
    ``max_iter`` solves (50 by default).
    """
    d = [float(v) for v in diag]
    n = len(d)
    b = float(offdiag)
    if b == 0.0 or n == 1:
        i = int(np.argmin(d))
        vec = np.zeros(n)
        vec[i] = 1.0
        return EigenPair(d[i], vec, 0.0, 0)

    lo, hi = _bisect_kth(d, b, 0, tol)
    scale = max(abs(v) for v in d) + 2.0 * abs(b)
    eps = np.finfo(float).eps

    # Shift strictly below the minimum so the flipped-sign matrix is a
    # positive-definite M-matrix.
    shift = lo - max(hi - lo, 4.0 * eps * scale)
    off = -abs(b)
    darr = np.array(d)

    # Thomas factorization of (T - shift I); pivots stay positive.
    p = np.empty(n)
    p[0] = d[0] - shift
    for i in range(1, n):
        p[i] = d[i] - shift - off * (off / p[i - 1])

    def solve(u):
        y = np.empty(n)
        y[0] = u[0]
        for i in range(1, n):
            y[i] = u[i] - (off / p[i - 1]) * y[i - 1]
        v = np.empty(n)
        v[n - 1] = y[n - 1] / p[n - 1]
        for i in range(n - 2, -1, -1):
            v[i] = (y[i] - off * v[i + 1]) / p[i]
        return v

    # The residual contract is 1e-10 * (1 + |value|) unless the matrix norm
    # makes that tighter than ~100 ulps of ||T||, which double precision
    # cannot beat; then the ulp floor applies.
    def threshold(lam):
        return max(1e-10 * (1.0 + abs(lam)), 100.0 * eps * scale)

    u = np.full(n, 1.0 / np.sqrt(n))
    best = None
    prev = np.inf
    for it in range(1, max_iter + 1):
        v = solve(u)
        v /= np.linalg.norm(v)
        tv = _apply(darr, off, v)
        lam = float(v @ tv)
        res = float(np.linalg.norm(tv - lam * v))
        if best is None or res < best[2]:
            best = (lam, v, res, it)
        if res <= 0.5 * threshold(lam):
            break
        if it >= 3 and res >= 0.9 * prev:
            break  # at the rounding floor; keep the best iterate
        prev = res
        u = v
    lam, v, res, it = best
    if res > threshold(lam):
        raise EigenConvergenceError(
            f"inverse iteration stalled at residual {res:.3e} after {it} solves"
        )

    if b > 0.0:
        v = v.copy()
        v[1::2] = -v[1::2]
    center = n // 2
    anchor = v[center] if v[center] != 0.0 else v[np.argmax(np.abs(v))]
    if anchor < 0.0:
        v = -v
    v.setflags(write=False)
    return EigenPair(lam, v, res, it)
