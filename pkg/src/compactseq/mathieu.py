"""Lowest even solution of the angular equation y'' + (a - 2q cos 2t) y = 0.

The pi-periodic even eigenfunctions have Fourier-cosine expansions in
cos(2kt) whose coefficient vectors are eigenvectors of the same
tridiagonal family used by the sequence designer: for the ground pair

    a0(q) = 4 * lambda_min(A - (|q|/2) B),

with A = diag(k^2) and B the constant lag-one form, and the coefficients
are the (entrywise positive) ground-state taps.  a0 is even in q, and
the two signs of q are related by the quarter-period reflection
ce0(q; t) = ce0(-q; pi/2 - t), which is how positive q is evaluated
here.  The grid half-length is grown automatically until the outermost
coefficients fall below 1e-12, so truncation never shows at double
precision.

Normalization: the returned values satisfy int_0^{2pi} ce0^2 dt = pi
(mean-square 1/2 over a period, the classical convention).  To read the
curve as a unit-energy spectrum instead, multiply by sqrt(2): the
spectrum of the unit-norm coefficient sequence is
X(e^{jw}) = sqrt(2) * ce0(q; w/2) for q <= 0.
"""

from __future__ import annotations

import math
from dataclasses import dataclass

import numpy as np

from .eigen import min_eigenpair

__all__ = ["MathieuEval", "char_value_a0", "ce0"]

_TAIL_AMP = 1e-12
_NORMALIZATION = "int_0^{2pi} ce0(q,t)^2 dt = pi; sqrt(2)*ce0 has unit mean square"


def _ground_taps(q: float, half_len: int | None):
    """Positive unit-norm coefficient taps for |q|, grown until tails vanish."""
    lam1 = 0.5 * abs(float(q))
    if half_len is not None:
        n = int(half_len)
        if n < 1:
            raise ValueError("half_len must be >= 1")
        sizes = [n]
    else:
        n = max(24, int(math.ceil(8.0 * (max(lam1, 1.0) / 2.0) ** 0.25)) + 8)
        sizes = [n, 2 * n, 4 * n, 8 * n, 16 * n]
    for n in sizes:
        k = np.arange(-n, n + 1, dtype=float)
        pair = min_eigenpair(k * k, -0.5 * lam1)
        v = pair.vector
        if half_len is not None or max(abs(v[0]), abs(v[-1])) < _TAIL_AMP:
            v = 0.5 * (v + v[::-1])
            v /= np.linalg.norm(v)
            return v, n, pair
    raise RuntimeError(f"coefficient tails not resolved at half_len {n}")


def char_value_a0(q: float, half_len: int | None = None) -> float:
    """Lowest characteristic value a0(q) = 4*lambda_min(A - (|q|/2)B)."""
    v, n, pair = _ground_taps(q, half_len)
    k = np.arange(-n, n + 1, dtype=float)
    tv = k * k * v
    tv[:-1] += -0.25 * abs(float(q)) * v[1:]
    tv[1:] += -0.25 * abs(float(q)) * v[:-1]
    return 4.0 * float(v @ tv)


@dataclass(frozen=True)
class MathieuEval:
    """ce0 samples plus the spectral data they came from.

    ``fourier_coeffs`` holds the full symmetric tap vector (positive,
    unit norm); tap N+k is the coefficient of cos(2kt) up to the overall
    1/sqrt(2) scale and, for q > 0, the reflection sign (-1)^k.
    """

    q: float
    a0: float
    thetas: np.ndarray
    values: np.ndarray
    fourier_coeffs: np.ndarray
    half_len: int
    normalization: str = _NORMALIZATION


def ce0(q: float, thetas, half_len: int | None = None) -> MathieuEval:
    """Sample the lowest even eigenfunction ce0(q; t) at the given angles."""
    q = float(q)
    v, n, pair = _ground_taps(q, half_len)
    t = np.atleast_1d(np.asarray(thetas, dtype=float))
    half = v[n:].copy()  # c_k = tap at +k, k = 0..n
    if q > 0.0:
        half[1::2] = -half[1::2]
    kk = np.arange(1, n + 1)
    vals = (half[0] + 2.0 * np.cos(2.0 * np.outer(t, kk)) @ half[1:]) / math.sqrt(2.0)

    k = np.arange(-n, n + 1, dtype=float)
    tv = k * k * v
    tv[:-1] += -0.25 * abs(q) * v[1:]
    tv[1:] += -0.25 * abs(q) * v[:-1]
    a0 = 4.0 * float(v @ tv)

    vals.setflags(write=False)
    return MathieuEval(
        q=q,
        a0=a0,
        thetas=t,
        values=vals,
        fourier_coeffs=v,
        half_len=n,
    )
