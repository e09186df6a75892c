"""S-packing colorings of integer distance graphs G(Z, {2, t}) and circulants C_n(2, t)."""

from .bounds import clique_check, greedy_firstfit, lb_ddist, ub_ddist
from .core import (
    CirculantSpec,
    DistanceOracle,
    DistanceSpec,
    HtGadget,
    WidthSequence,
    build_ht,
    conflict_offsets,
    dist_circulant,
    dist_delta,
)
from .patterns import (
    chrom3_pattern,
    ddist_pattern,
    dist2_pattern,
    p1122_pattern,
    p12222_pattern,
)
from .solve import (
    SolveOutcome,
    ht_infeasible,
    periodic_search,
    solve_circulant,
    window_infeasible,
)
from .verify import FiniteColoring, PeriodicColoring, Violation, Window, verify_finite, verify_periodic

__version__ = "0.1.0"
