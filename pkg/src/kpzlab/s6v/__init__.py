"""Colored stochastic six-vertex sampling and its exclusion degeneration."""

from .model import (  # noqa: F401
    NEG_INF,
    ArrowField,
    BoundaryCondition,
    CapExceededError,
    DegenerationParams,
    asep_degeneration,
    colored_height,
    default_row_cap,
    degeneration_proxy_samples,
    height_general,
    heights_batch,
    merge_colors,
    sample,
    threshold_merge,
)
from .pairing import TrajectoryPairing, pair_trajectories  # noqa: F401
