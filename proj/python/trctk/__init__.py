"""Total-rainbow connection toolkit."""

from ._core import (
    Graph,
    SolveStats,
    TotalColoring,
    TrcResult,
    classify_line,
    coloring_from_text,
    coloring_to_text,
    compute_trc,
    generate,
    ng_bound,
    solve_trc,
    trc_bounds,
    verify,
)

__all__ = [
    "Graph",
    "SolveStats",
    "TotalColoring",
    "TrcResult",
    "classify_line",
    "coloring_from_text",
    "coloring_to_text",
    "compute_trc",
    "generate",
    "ng_bound",
    "solve_trc",
    "trc_bounds",
    "verify",
]
