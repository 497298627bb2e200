"""The shifted tridiagonal pencil behind the compactness design problem.

On the symmetric index grid k = -N..N two quadratic forms matter: the
time-energy form with matrix A = diag(k^2) and the lag-one averaging form
with matrix B (zero diagonal, constant off-diagonal 1/2), whose value on
a unit vector equals the vector's first trigonometric moment.  The dual
of the design problem works with the combination

    P(lambda1, lambda2) = A - lambda1 * B - lambda2 * I,

a symmetric tridiagonal matrix with diagonal k^2 - lambda2 and constant
off-diagonal -lambda1/2.  This module builds that pencil, evaluates the
two forms, and tests positive semidefiniteness via the LDL^T pivot
recurrence, which doubles as a certificate.
"""

from __future__ import annotations

import math
from dataclasses import dataclass

import numpy as np

__all__ = [
    "Pencil",
    "PivotCertificate",
    "build_pencil",
    "quad_forms",
    "psd_check",
    "restricted_cone_test",
]

_PIVOT_TOL = 1e-12


@dataclass(frozen=True)
class Pencil:
    """A - lambda1*B - lambda2*I restricted to the grid k = -N..N."""

    half_len: int
    lambda1: float
    lambda2: float
    diag: np.ndarray
    offdiag: float

    @property
    def size(self) -> int:
        return 2 * self.half_len + 1

    @property
    def grid(self) -> np.ndarray:
        return np.arange(-self.half_len, self.half_len + 1)


def build_pencil(half_len: int, lambda1: float, lambda2: float) -> Pencil:
    """Assemble the pencil for grid half-length N >= 1."""
    n = int(half_len)
    if n < 1:
        raise ValueError("half_len must be >= 1")
    k = np.arange(-n, n + 1)
    diag = k.astype(float) ** 2 - float(lambda2)
    diag.setflags(write=False)
    return Pencil(n, float(lambda1), float(lambda2), diag, -float(lambda1) / 2.0)


def quad_forms(p: Pencil, x: np.ndarray) -> tuple[float, float]:
    """Values (x'Ax, x'Bx) of the two defining forms on a unit vector.

    x'Ax is the time-energy sum(k^2 x_k^2); x'Bx = sum(x_k x_{k+1}) is the
    lag-one form the spread constraint acts on.
    """
    x = np.asarray(x, dtype=float)
    if x.shape != (p.size,):
        raise ValueError(f"x must have shape ({p.size},)")
    nrm = float(x @ x)
    if abs(nrm - 1.0) > 1e-10:
        raise ValueError(f"x must be unit-norm (got ||x||^2 = {nrm!r})")
    k = p.grid.astype(float)
    a = float(x @ (k * k * x))
    b = float(x[:-1] @ x[1:])
    return a, b


@dataclass(frozen=True)
class PivotCertificate:
    """LDL^T pivot evidence for a semidefiniteness verdict.

    ``is_psd`` is the verdict; ``min_pivot`` the smallest pivot seen.  On
    failure ``fail_index`` holds the grid index k whose pivot first drops
    below -1e-12 (None on success).
    """

    is_psd: bool
    min_pivot: float
    fail_index: int | None


def psd_check(p: Pencil) -> PivotCertificate:
    """LDL^T positive-semidefiniteness test with pivot certificate.

    Runs the pivot recurrence s <- d_k - (lambda1^2/4)/s across the grid;
    the pencil is reported semidefinite iff every pivot stays above
    -1e-12.  A zero pivot with coupling still ahead propagates a huge
    negative pivot next step, which matches the exact-arithmetic verdict.
    """
    d = p.diag.tolist()
    b2 = p.offdiag * p.offdiag
    piv = d[0]
    min_piv = piv
    if piv < -_PIVOT_TOL:
        return PivotCertificate(False, piv, -p.half_len)
    for i in range(1, len(d)):
        if piv == 0.0:
            piv = 1e-290
        piv = d[i] - b2 / piv
        if piv < min_piv:
            min_piv = piv
        if piv < -_PIVOT_TOL:
            return PivotCertificate(False, min_piv, i - p.half_len)
    return PivotCertificate(True, min_piv, None)


def restricted_cone_test(lambda1: float, lambda2: float) -> bool:
    """Closed-form sufficient condition lambda2 < 1 - sqrt(1 + lambda1^2).

    Points satisfying it are semidefinite on every grid length, so the
    test is a conservative (strictly smaller) region than psd_check on a
    finite grid.
    """
    return lambda2 < 1.0 - math.sqrt(1.0 + lambda1 * lambda1)
