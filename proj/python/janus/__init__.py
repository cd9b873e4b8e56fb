"""Python access to the janus g2 engine."""

from ._janus import (
    JanusError,
    __version__,
    boundary_curve,
    g2,
    g2_boundary,
    g2_fock,
    g2_optimal,
    odd_cat_g2,
    presets,
    read_scan,
    ridge_row,
    scan_preset,
    solve_chi,
    sweet_spot,
    write_preset,
)

__all__ = [
    "JanusError",
    "__version__",
    "boundary_curve",
    "g2",
    "g2_boundary",
    "g2_fock",
    "g2_optimal",
    "odd_cat_g2",
    "presets",
    "read_scan",
    "ridge_row",
    "scan_preset",
    "solve_chi",
    "sweet_spot",
    "write_preset",
]
