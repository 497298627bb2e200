"""Time-frequency spread measures and maximally compact sequence design.

The package measures how concentrated a finite discrete-time sequence is
jointly in time and frequency, and designs sequences that are as compact
in time as possible for a prescribed periodic frequency spread.  The
designer's tridiagonal machinery doubles as an evaluator for the lowest
even angular eigenfunction ce0 and its characteristic value a0.
"""

from .bounds import BoundPair, a0_upper_bound, bound_pair, eta_lower, eta_upper, mclachlan_a0
from .design import (
    CurvePoint,
    DesignConvergenceError,
    DesignResult,
    UnattainableSpreadError,
    design_max_compact,
    dual_value,
    sweep_curve,
)
from .eigen import EigenConvergenceError, EigenPair, kth_eigenvalue, min_eigenpair, min_eigenvalue
from .mathieu import MathieuEval, ce0, char_value_a0
from .pencil import Pencil, PivotCertificate, build_pencil, psd_check, quad_forms, restricted_cone_test
from .sequence import (
    Sequence,
    autocorrelation,
    dtft,
    modulus,
    norm2,
    read_sequence,
    shift,
    write_sequence,
)
from .spreads import (
    DegenerateSpreadError,
    SpreadReport,
    linear_freq_spread,
    measure,
    periodic_freq_spread,
    tf_spread_linear,
    tf_spread_periodic,
    time_center,
    time_spread,
    trig_moment,
)
from .windows import (
    WindowFamily,
    default_families,
    sampled_gaussian,
    spread_scan,
    standard_windows,
    three_tap,
    three_tap_eta_p,
)

__version__ = "0.1.0"
