"""Classical FIR window families and their spread scan.

Every generator returns a unit-energy :class:`~compactseq.sequence.Sequence`
centered at index 0 (odd tap counts only, so the center is an integer and
the time mean sits exactly on the grid).  ``spread_scan`` sweeps a family
across its parameter grid and records (delta_wp2, delta_n2, eta_p) per
point, which is the comparison data set for judging windows against the
designed optimum at matched frequency spread.
"""

from __future__ import annotations

import math
from dataclasses import dataclass, field
from typing import Callable

import numpy as np

from .sequence import Sequence
from .spreads import measure

__all__ = [
    "WindowFamily",
    "ScanPoint",
    "WINDOW_NAMES",
    "standard_windows",
    "sampled_gaussian",
    "three_tap",
    "three_tap_eta_p",
    "default_families",
    "spread_scan",
    "scan_to_csv",
]

WINDOW_NAMES = ("rectangular", "triangular", "hann", "hamming", "blackman")


def _unit(taps: np.ndarray, offset: int) -> Sequence:
    return Sequence(taps / np.linalg.norm(taps), offset)


def _check_taps(taps: int, minimum: int = 3) -> int:
    taps = int(taps)
    if taps < minimum:
        raise ValueError(f"taps must be >= {minimum}")
    if taps % 2 == 0:
        raise ValueError("taps must be odd so the window centers on the grid")
    return taps


def standard_windows(name: str, taps: int) -> Sequence:
    """One of the classical windows, unit energy, centered at index 0.

    Supported names: rectangular, triangular (Bartlett, zero endpoints),
    hann, hamming (0.54/0.46), blackman (0.42/0.50/0.08).  ``taps`` is the
    full length M; the cosine windows use the symmetric convention with
    denominator M - 1.
    """
    taps = _check_taps(taps)
    n = np.arange(taps, dtype=float)
    m = taps - 1
    if name == "rectangular":
        w = np.ones(taps)
    elif name == "triangular":
        w = 1.0 - np.abs(n - m / 2.0) / (m / 2.0)
    elif name == "hann":
        w = 0.5 - 0.5 * np.cos(2.0 * math.pi * n / m)
    elif name == "hamming":
        w = 0.54 - 0.46 * np.cos(2.0 * math.pi * n / m)
    elif name == "blackman":
        w = (
            0.42
            - 0.5 * np.cos(2.0 * math.pi * n / m)
            + 0.08 * np.cos(4.0 * math.pi * n / m)
        )
    else:
        raise ValueError(f"unknown window {name!r}; expected one of {WINDOW_NAMES}")
    return _unit(w, -(taps // 2))


def sampled_gaussian(width: float, taps: int) -> Sequence:
    """Samples of exp(-k^2 / (2 width^2)) on k = -N..N, unit energy."""
    width = float(width)
    if width <= 0.0:
        raise ValueError("width must be positive")
    taps = _check_taps(taps)
    half = taps // 2
    k = np.arange(-half, half + 1, dtype=float)
    return _unit(np.exp(-(k * k) / (2.0 * width * width)), -half)


def gaussian_auto_taps(width: float) -> int:
    """Tap count that buries the Gaussian's truncation below 1e-12."""
    return 2 * (int(math.ceil(8.0 * max(float(width), 0.5))) + 4) + 1


def three_tap(eps: float) -> Sequence:
    """The three-tap probe (eps, sqrt(1 - 2 eps^2), eps) at k = -1, 0, 1.

    Needs 0 < eps < 1/sqrt(2).  Its spread product has the closed form
    given by :func:`three_tap_eta_p`, approaching 1/2 at both ends of the
    parameter range.
    """
    eps = float(eps)
    if not 0.0 < eps < 1.0 / math.sqrt(2.0):
        raise ValueError("eps must lie in (0, 1/sqrt(2))")
    mid = math.sqrt(1.0 - 2.0 * eps * eps)
    return Sequence(np.array([eps, mid, eps]), -1)


def three_tap_eta_p(eps: float) -> float:
    """Closed form eta_p of the three-tap probe: 1/(2(1-2eps^2)) - 2eps^2."""
    eps = float(eps)
    return 1.0 / (2.0 * (1.0 - 2.0 * eps * eps)) - 2.0 * eps * eps


@dataclass(frozen=True)
class WindowFamily:
    """A named one-parameter family of unit-energy windows."""

    name: str
    params: tuple
    builder: Callable[[float], Sequence]


def default_families() -> list[WindowFamily]:
    """The stock scan set: five classical windows over odd lengths
    5..401, sampled Gaussians over log-spaced widths [0.3, 50], and the
    three-tap probe over its parameter range."""
    length_grid = tuple(range(5, 402, 4))
    fams = [
        WindowFamily(name, length_grid, lambda t, _n=name: standard_windows(_n, int(t)))
        for name in WINDOW_NAMES
    ]
    widths = tuple(float(w) for w in np.geomspace(0.3, 50.0, 25))
    fams.append(
        WindowFamily(
            "gaussian",
            widths,
            lambda w: sampled_gaussian(w, gaussian_auto_taps(w)),
        )
    )
    eps_grid = tuple(float(e) for e in np.linspace(0.05, 0.65, 13))
    fams.append(WindowFamily("three_tap", eps_grid, three_tap))
    return fams


@dataclass(frozen=True)
class ScanPoint:
    family: str
    param: float
    delta_wp2: float
    delta_n2: float
    eta_p: float
    error: str | None = None


def spread_scan(family: WindowFamily) -> list[ScanPoint]:
    """Measure the family across its grid, sorted by delta_wp2.

    A parameter whose window degenerates (single nonzero tap, vanishing
    trig moment) yields a NaN point carrying the error text instead of
    aborting the scan.
    """
    points = []
    for p in family.params:
        try:
            rep = measure(family.builder(p))
            eta = rep.eta_p
            if eta is None:
                raise ValueError("degenerate single-tap window")
            points.append(
                ScanPoint(family.name, float(p), rep.delta_wp2, rep.delta_n2, eta)
            )
        except ValueError as exc:
            points.append(
                ScanPoint(family.name, float(p), math.nan, math.nan, math.nan, str(exc))
            )
    points.sort(key=lambda pt: (math.isnan(pt.delta_wp2), pt.delta_wp2))
    return points


def scan_to_csv(scans) -> str:
    """CSV rows ``family,param,delta_wp2,delta_n2,eta_p`` for scan output."""
    lines = ["family,param,delta_wp2,delta_n2,eta_p"]
    for points in scans:
        for p in points:
            lines.append(
                f"{p.family},{p.param!r},{p.delta_wp2!r},{p.delta_n2!r},{p.eta_p!r}"
            )
    return "\n".join(lines) + "\n"
