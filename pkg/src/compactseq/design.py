"""Design of maximally compact sequences.

Target: among unit-energy sequences on the grid k = -N..N whose periodic
frequency spread equals a prescribed sigma2, find the one with minimal
time spread delta_n2.  Fixing the spread is the scalar constraint
x'Bx = alpha = 1/sqrt(1 + sigma2) on the lag-one form, so the problem is
a minimization of the time-energy form x'Ax over that slice of the unit
sphere.  Its semidefinite relaxation is tight and the dual collapses to
one scalar variable:

    maximize  g(l1) = alpha*l1 + lambda_min(A - l1*B)   over l1 >= 0.

g is concave; its derivative is alpha - b(l1) where b(l1) = x'Bx on the
ground state of A - l1*B, and b is nondecreasing in l1 with b(0) = 0 and
supremum lambda_max(B) = cos(pi/(2N+2)).  The optimizer therefore brackets
and bisects b(l1) = alpha, which simultaneously drives the duality gap
(= l1 * |b - alpha| for the ground-state primal candidate) to zero.  The
optimal sequence is the ground state itself: symmetric, entrywise
positive, and unit norm by construction.
"""

from __future__ import annotations

import json
import math
from dataclasses import dataclass

import numpy as np

from .bounds import eta_lower, eta_upper
from .eigen import min_eigenpair
from .sequence import Sequence

__all__ = [
    "UnattainableSpreadError",
    "DesignConvergenceError",
    "DesignResult",
    "CurvePoint",
    "dual_value",
    "design_max_compact",
    "sweep_curve",
    "curve_to_csv",
    "design_to_json",
    "TAIL_MASS_WARN",
]

TAIL_MASS_WARN = 1e-10


class UnattainableSpreadError(RuntimeError):
    """The requested spread needs a longer grid than the given tap count."""


class DesignConvergenceError(RuntimeError):
    """The dual bisection could not reach its gap target."""


@dataclass(frozen=True)
class DesignResult:
    """Solution and optimality certificates of one design run.

    ``eta_p`` is the product delta_n2_opt * sigma2.  The three gap fields
    certify the solution: duality_gap compares the primal objective with
    the dual value, constraint_gap is x'Bx - alpha on the returned
    sequence, eig_residual is the ground-state residual norm.  tail_mass
    is the energy in the two outermost taps; if it exceeds 1e-10 the grid
    was too short for the requested spread and status says "increase-taps".
    """

    sigma2: float
    alpha: float
    lambda1: float
    lambda2: float
    delta_n2_opt: float
    eta_p: float
    sequence: Sequence
    duality_gap: float
    constraint_gap: float
    eig_residual: float
    tail_mass: float
    status: str


def _ground(k2, lambda1):
    """Ground eigenpair of A - lambda1*B plus its lag-one form value."""
    pair = min_eigenpair(k2, -0.5 * lambda1)
    v = pair.vector
    return pair, float(v[:-1] @ v[1:])


def dual_value(lambda1: float, alpha: float, half_len: int) -> tuple[float, float]:
    """Dual objective g(lambda1) and the lag-one form b(lambda1).

    b is the gradient complement: g'(lambda1) = alpha - b(lambda1).
    """
    if lambda1 < 0:
        raise ValueError("lambda1 must be >= 0")
    n = int(half_len)
    k = np.arange(-n, n + 1, dtype=float)
    pair, b = _ground(k * k, float(lambda1))
    return float(alpha) * float(lambda1) + pair.value, b


def design_max_compact(sigma2: float, taps: int = 201, tol: float = 1e-10) -> DesignResult:
    """Minimal-time-spread sequence with periodic frequency spread sigma2.

    ``taps`` (odd, >= 5) fixes the grid k = -(taps-1)/2 .. (taps-1)/2; it
    must be large enough that alpha = 1/sqrt(1+sigma2) stays below the
    largest eigenvalue cos(pi/(taps+1)) of the lag-one form, otherwise the
    constraint is unattainable and UnattainableSpreadError is raised.
    ``tol`` bounds |x'Bx - alpha| at the solution; the bisection tightens
    it further to keep the duality gap near 1e-9 even for large lambda1.
    """
    sigma2 = float(sigma2)
    if not (math.isfinite(sigma2) and sigma2 > 0.0):
        raise ValueError("sigma2 must be positive and finite")
    taps = int(taps)
    if taps < 5 or taps % 2 == 0:
        raise ValueError("taps must be odd and >= 5")
    tol = float(tol)
    if tol < 1e-12:
        raise ValueError("tol must be >= 1e-12")

    half = (taps - 1) // 2
    alpha = 1.0 / math.sqrt(1.0 + sigma2)
    b_sup = math.cos(math.pi / (taps + 1))
    if alpha >= b_sup:
        raise UnattainableSpreadError(
            f"alpha = {alpha:.12g} >= cos(pi/{taps + 1}) = {b_sup:.12g}: "
            f"taps too few for sigma2 = {sigma2:.6g}"
        )

    k = np.arange(-half, half + 1, dtype=float)
    k2 = k * k

    def gap_target(l1):
        return min(tol, 1e-9 / max(1.0, l1))

    # Bracket the crossing b(l1) = alpha; b(0) = 0 < alpha.
    lo, b_lo = 0.0, 0.0
    hi = 1.0
    pair_hi, b_hi = _ground(k2, hi)
    doublings = 0
    while b_hi <= alpha:
        lo, b_lo = hi, b_hi
        hi *= 2.0
        pair_hi, b_hi = _ground(k2, hi)
        doublings += 1
        if doublings > 60:
            raise DesignConvergenceError("could not bracket the dual optimum")

    best = (hi, pair_hi, b_hi)
    for _ in range(300):
        mid = 0.5 * (lo + hi)
        if mid <= lo or mid >= hi:
            break
        pair_mid, b_mid = _ground(k2, mid)
        if abs(b_mid - alpha) < abs(best[2] - alpha):
            best = (mid, pair_mid, b_mid)
        if abs(b_mid - alpha) <= gap_target(mid):
            break
        if b_mid < alpha:
            lo = mid
        else:
            hi = mid
    lambda1, pair, _ = best
    gap = abs(best[2] - alpha)
    # Once lambda1 is large the constraint can only be met to rounding in
    # b - alpha (one ulp of alpha), so the certifiable duality gap floors
    # at lambda1 * ulp.  Accept whatever bisection achieved as long as the
    # published certificates still hold; raise only when they cannot.
    if gap > tol or lambda1 * gap > 1e-8:
        raise DesignConvergenceError(
            f"constraint gap {best[2] - alpha:.3e} above target at lambda1 = {lambda1!r}"
        )

    # Canonical output: exactly symmetric, entrywise positive, unit norm.
    v = pair.vector
    v = 0.5 * (v + v[::-1])
    v /= np.linalg.norm(v)

    tv = k2 * v
    tv[:-1] += -0.5 * lambda1 * v[1:]
    tv[1:] += -0.5 * lambda1 * v[:-1]
    lambda2 = float(v @ tv)
    eig_residual = float(np.linalg.norm(tv - lambda2 * v))
    a_form = float(v @ (k2 * v))
    b_form = float(v[:-1] @ v[1:])

    dual = alpha * lambda1 + lambda2
    tail = float(v[0] ** 2 + v[-1] ** 2)
    return DesignResult(
        sigma2=sigma2,
        alpha=alpha,
        lambda1=lambda1,
        lambda2=lambda2,
        delta_n2_opt=a_form,
        eta_p=a_form * sigma2,
        sequence=Sequence(v, offset=-half),
        duality_gap=abs(a_form - dual),
        constraint_gap=b_form - alpha,
        eig_residual=eig_residual,
        tail_mass=tail,
        status="increase-taps" if tail > TAIL_MASS_WARN else "ok",
    )


@dataclass(frozen=True)
class CurvePoint:
    """One sweep sample: optimum plus the analytic envelope at sigma2."""

    sigma2: float
    delta_n2: float
    eta_p: float
    eta_lower: float
    eta_upper: float
    error: str | None = None


def sweep_curve(sigma2_grid, taps: int = 201, tol: float = 1e-10) -> list[CurvePoint]:
    """Run the designer across a sigma2 grid; failures mark their point.

    Points are produced in grid order.  A point whose design raises keeps
    the bounds but gets NaN optimal values and the error message, so one
    infeasible sample never aborts a sweep.
    """
    points = []
    for s2 in sigma2_grid:
        s2 = float(s2)
        lo_b = eta_lower(s2)
        up_b = eta_upper(s2)
        try:
            res = design_max_compact(s2, taps=taps, tol=tol)
        except (UnattainableSpreadError, DesignConvergenceError) as exc:
            points.append(CurvePoint(s2, math.nan, math.nan, lo_b, up_b, str(exc)))
        else:
            points.append(CurvePoint(s2, res.delta_n2_opt, res.eta_p, lo_b, up_b))
    return points


def curve_to_csv(points) -> str:
    lines = ["sigma2,delta_n2,eta_p,eta_lower,eta_upper"]
    for p in points:
        lines.append(
            f"{p.sigma2!r},{p.delta_n2!r},{p.eta_p!r},{p.eta_lower!r},{p.eta_upper!r}"
        )
    return "\n".join(lines) + "\n"


def design_to_json(res: DesignResult) -> str:
    obj = {
        "sigma2": res.sigma2,
        "alpha": res.alpha,
        "lambda1": res.lambda1,
        "lambda2": res.lambda2,
        "delta_n2_opt": res.delta_n2_opt,
        "eta_p": res.eta_p,
        "duality_gap": res.duality_gap,
        "constraint_gap": res.constraint_gap,
        "eig_residual": res.eig_residual,
        "tail_mass": res.tail_mass,
        "status": res.status,
        "sequence": {
            "offset": res.sequence.offset,
            "taps": [float(t.real) for t in res.sequence.taps],
        },
    }
    return json.dumps(obj)
