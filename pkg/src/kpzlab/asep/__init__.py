"""Colored exclusion dynamics on a finite window or a ring.

The window dynamics replay the clock construction exactly: every site
carries a rate-1 right stream and a rate-q left stream addressed by
coordinates, all trajectories driven by one merged time-ordered queue.
Sites beyond the window are frozen, and the window policy (half-width at
least ``ceil(4t) + radius + 8``) keeps certified observations unaffected;
queries outside the certified region raise :class:`WindowTooSmallError`.

Law-level Monte Carlo (one-point statistics over many replicas) lives in
:mod:`kpzlab.asep.kinetic`.
"""

from .graphical import (  # noqa: F401
    BernoulliPath,
    ColoredConfiguration,
    HeightField,
    WindowTooSmallError,
    basic_couple,
    certified_radius,
    colored_height,
    evolve,
    height_from_profile,
    height_profile,
    merge_colors,
    packed_configuration,
    required_half_width,
    ring_configuration,
    step_profile,
)
from .kinetic import ring_stationary_sample, step_current_samples  # noqa: F401
