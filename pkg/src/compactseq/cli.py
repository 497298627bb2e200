"""Command-line front end.

Subcommands
-----------
design   solve for the maximally compact sequence at one sigma2 (JSON)
analyze  spread report for a sequence file (JSON)
curve    sweep the optimal-compactness curve over a sigma2 grid (CSV)
mathieu  ce0 samples for one q, or an a0(q) table over a q grid (CSV)
windows  spread scan of the stock window families (CSV)

Grids are given as ``start:stop:points:log`` or ``start:stop:points:lin``.
Output goes to stdout unless ``--output`` names a file; bytes are a pure
function of the flags, so reruns reproduce them exactly.  Exit status is
0 on success, 1 for invalid arguments or inputs, 2 when a solve fails or
the requested constraint is unattainable at the given tap count.
"""

from __future__ import annotations

import argparse
import json
import math
import sys

import numpy as np

from .bounds import eta_lower, eta_upper
from .design import (
    DesignConvergenceError,
    UnattainableSpreadError,
    curve_to_csv,
    design_max_compact,
    design_to_json,
    sweep_curve,
)
from .eigen import EigenConvergenceError
from .mathieu import ce0, char_value_a0
from .sequence import read_sequence, sequence_to_text
from .spreads import measure, report_to_json
from .windows import WINDOW_NAMES, default_families, scan_to_csv, spread_scan

__all__ = ["main"]

_SOLVER_ERRORS = (UnattainableSpreadError, DesignConvergenceError, EigenConvergenceError)


class _CliError(Exception):
    pass


class _Parser(argparse.ArgumentParser):
    def error(self, message):  # exit 1 on bad flags, not argparse's 2
        raise _CliError(message)


def _parse_grid(text: str) -> np.ndarray:
    parts = text.split(":")
    if len(parts) != 4:
        raise _CliError(f"grid must be start:stop:points:log|lin, got {text!r}")
    try:
        start, stop, points = float(parts[0]), float(parts[1]), int(parts[2])
    except ValueError as exc:
        raise _CliError(f"bad grid {text!r}: {exc}") from None
    kind = parts[3]
    if points < 1:
        raise _CliError("grid needs at least one point")
    if kind == "log":
        if start <= 0 or stop <= 0:
            raise _CliError("log grid endpoints must be positive")
        return np.geomspace(start, stop, points)
    if kind == "lin":
        return np.linspace(start, stop, points)
    raise _CliError(f"grid kind must be log or lin, got {kind!r}")


def _csv_cell(v) -> str:
    if v is None:
        return "nan"
    return repr(float(v))


def _run_design(args) -> str:
    res = design_max_compact(args.sigma2, taps=args.taps, tol=args.tol)
    if args.seq_output:
        with open(args.seq_output, "w", encoding="utf-8") as fh:
            fh.write(sequence_to_text(res.sequence))
    if args.format == "json":
        return design_to_json(res) + "\n"
    head = (
        "sigma2,alpha,lambda1,lambda2,delta_n2,eta_p,"
        "duality_gap,constraint_gap,eig_residual,tail_mass,status"
    )
    row = ",".join(
        _csv_cell(v)
        for v in (
            res.sigma2,
            res.alpha,
            res.lambda1,
            res.lambda2,
            res.delta_n2_opt,
            res.eta_p,
            res.duality_gap,
            res.constraint_gap,
            res.eig_residual,
            res.tail_mass,
        )
    )
    return f"{head}\n{row},{res.status}\n"


def _run_analyze(args) -> str:
    rep = measure(read_sequence(args.input))
    if args.format == "json":
        return report_to_json(rep) + "\n"
    head = "mu_n,delta_n2,tau_re,tau_im,delta_wp2,mu_wl,delta_wl2,eta_p,eta_l"
    row = ",".join(
        _csv_cell(v)
        for v in (
            rep.mu_n,
            rep.delta_n2,
            rep.tau.real,
            rep.tau.imag,
            rep.delta_wp2,
            rep.mu_wl,
            rep.delta_wl2,
            rep.eta_p,
            rep.eta_l,
        )
    )
    return f"{head}\n{row}\n"


def _run_curve(args) -> str:
    grid = _parse_grid(args.grid)
    points = sweep_curve(grid, taps=args.taps, tol=args.tol)
    if args.format == "json":
        obj = [
            {
                "sigma2": p.sigma2,
                "delta_n2": None if math.isnan(p.delta_n2) else p.delta_n2,
                "eta_p": None if math.isnan(p.eta_p) else p.eta_p,
                "eta_lower": p.eta_lower,
                "eta_upper": p.eta_upper,
                "error": p.error,
            }
            for p in points
        ]
        return json.dumps(obj) + "\n"
    return curve_to_csv(points)


def _run_mathieu(args) -> str:
    if args.q is not None:
        thetas = _parse_grid(args.grid or "0:3.141592653589793:257:lin")
        ev = ce0(args.q, thetas)
        lines = [f"# q={ev.q!r} a0={ev.a0!r}", "theta,ce0"]
        lines += [f"{float(t)!r},{float(v)!r}" for t, v in zip(ev.thetas, ev.values)]
        return "\n".join(lines) + "\n"
    qs = _parse_grid(args.grid or "0.25:100:40:log")
    lines = ["q,a0"]
    lines += [f"{float(q)!r},{char_value_a0(q)!r}" for q in qs]
    return "\n".join(lines) + "\n"


def _run_windows(args) -> str:
    fams = default_families()
    if args.family != "all":
        fams = [f for f in fams if f.name == args.family]
        if not fams:
            raise _CliError(f"unknown family {args.family!r}")
    return scan_to_csv(spread_scan(f) for f in fams)


def _build_parser() -> _Parser:
    parser = _Parser(prog="compactseq", description=__doc__.splitlines()[0])
    sub = parser.add_subparsers(dest="command", required=True)

    p = sub.add_parser("design", help="maximally compact sequence for one sigma2")
    p.add_argument("--sigma2", type=float, required=True,
                   help="target periodic frequency spread (> 0)")
    p.add_argument("--taps", type=int, default=201, help="odd grid length (default 201)")
    p.add_argument("--tol", type=float, default=1e-10, help="constraint tolerance")
    p.add_argument("--seq-output", help="also write the sequence file here")
    p.add_argument("--format", choices=("json", "csv"), default="json")
    p.set_defaults(run=_run_design)

    p = sub.add_parser("analyze", help="spread report for a sequence file")
    p.add_argument("--input", required=True, help="sequence file ('re im' lines)")
    p.add_argument("--format", choices=("json", "csv"), default="json")
    p.set_defaults(run=_run_analyze)

    p = sub.add_parser("curve", help="optimal curve over a sigma2 grid")
    p.add_argument("--grid", default="0.01:10:25:log",
                   help="sigma2 grid start:stop:points:log|lin")
    p.add_argument("--taps", type=int, default=201)
    p.add_argument("--tol", type=float, default=1e-10)
    p.add_argument("--format", choices=("json", "csv"), default="csv")
    p.set_defaults(run=_run_curve)

    p = sub.add_parser("mathieu", help="ce0 samples for one q, or an a0 table")
    p.add_argument("--q", type=float, help="evaluate ce0 at this q")
    p.add_argument("--grid",
                   help="theta grid with --q (default 0:pi:257:lin), "
                        "else q grid (default 0.25:100:40:log)")
    p.set_defaults(run=_run_mathieu)

    p = sub.add_parser("windows", help="spread scan of the stock window families")
    p.add_argument("--family", default="all",
                   choices=("all", "gaussian", "three_tap") + WINDOW_NAMES)
    p.set_defaults(run=_run_windows)

    for sp in sub.choices.values():
        sp.add_argument("--output", help="write here instead of stdout")
    return parser


def main(argv=None) -> int:
    parser = _build_parser()
    try:
        args = parser.parse_args(argv)
        text = args.run(args)
    except _CliError as exc:
        print(f"compactseq: error: {exc}", file=sys.stderr)
        return 1
    except (ValueError, OSError) as exc:
        print(f"compactseq: error: {exc}", file=sys.stderr)
        return 1
    except _SOLVER_ERRORS as exc:
        print(f"compactseq: solver failure: {exc}", file=sys.stderr)
        return 2
    if args.output:
        with open(args.output, "w", encoding="utf-8") as fh:
            fh.write(text)
    else:
        sys.stdout.write(text)
    return 0


if __name__ == "__main__":
    sys.exit(main())
