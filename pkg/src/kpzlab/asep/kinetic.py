"""Law-level exclusion Monte Carlo.

These samplers draw only executable moves, which is distributionally
identical to ringing every clock and discarding blocked attempts, but
orders of magnitude faster for replica sweeps.  They are keyed by
(master seed, replica), so runs are reproducible; they are *not* pathwise
coupled across initial conditions (use :mod:`kpzlab.asep.graphical` for
that).
"""

from __future__ import annotations

import math

import numpy as np

from .. import _kernels, randomness
from .graphical import ColoredConfiguration, ring_configuration


def step_current_samples(q: float, t: float, n_reps: int, master_seed: int,
                         y: int = 0, half_width: int | None = None,
                         rep0: int = 0) -> np.ndarray:
    """Replicated h(0, 0; y, t): particles strictly right of y at time t.

    Step initial data (particles at sites <= 0) on a window wide enough for
    the finite-speed policy.
    """
    if half_width is None:
        # light-cone sizing: activity beyond speed 1.25 is a Poisson tail
        # event; the frozen margins are asserted after every replica
        half_width = math.ceil(1.25 * t) + abs(y) + 64
    key = randomness.domain_key(master_seed, "replica")
    out = np.empty(n_reps, dtype=np.int64)
    sites = np.arange(-half_width, half_width + 1)
    for r in range(n_reps):
        occ = _kernels.window_step_current(half_width, q, t, key, rep0 + r)
        if occ[:4].sum() != 4 or occ[-4:].sum() != 0:
            raise RuntimeError("activity reached the window margin; "
                               "increase half_width")
        out[r] = int(occ[sites > y].sum())
    return out


def ring_stationary_sample(color_counts: dict, ring_size: int,
                           burn_in: float | None, master_seed: int,
                           replica: int = 0, q: float = 0.5,
                           method: str = "burn_in") -> ColoredConfiguration:
    """Approximate multi-type stationary state on a ring.

    Starts from the blocked arrangement and runs the swap dynamics for
    ``burn_in`` time units (default ``20 * ring_size``).  For a
    single-color system ``method="exact_uniform"`` skips the dynamics and
    places the particles uniformly, which is the stationary law itself.
    """
    if burn_in is None:
        burn_in = 20.0 * ring_size
    if burn_in < 0:
        raise ValueError("burn-in must be nonnegative")
    counts = {c: n for c, n in color_counts.items() if n > 0}
    if sum(counts.values()) > ring_size:
        raise ValueError("ring overfull")
    key = randomness.domain_key(master_seed, "replica")
    if method == "exact_uniform":
        if len(counts) != 1:
            raise ValueError("exact uniform placement needs a single color")
        (color, n_particles), = counts.items()
        sites = _uniform_subset(ring_size, n_particles, key, replica)
        colors = [0] * ring_size
        for s in sites:
            colors[s] = color
        return ColoredConfiguration(tuple(colors), 0, "ring")
    if method != "burn_in":
        raise ValueError("method must be burn_in or exact_uniform")
    config = ring_configuration(dict(counts), ring_size)
    colors = np.asarray(config.colors, dtype=np.int64).copy()
    _kernels.ring_evolve(colors, q, float(burn_in), key, replica, 0)
    return ColoredConfiguration(tuple(int(c) for c in colors), 0, "ring")


def colored_height_samples(q: float, t: float, queries, n_reps: int,
                           master_seed: int, rep0: int = 0,
                           half_width: int | None = None) -> np.ndarray:
    """Replicated packed-state colored heights h(x, 0; y, t).

    ``queries`` is a list of (x, y) pairs; each replica is one colored
    window trajectory, so the heights are jointly coupled across queries
    exactly as in the colored process.
    """
    max_arg = max(max(abs(x), abs(y)) for x, y in queries)
    if half_width is None:
        half_width = math.ceil(4 * t) + max_arg + 8
    key = randomness.domain_key(master_seed, "replica")
    sites = np.arange(-half_width, half_width + 1)
    out = np.empty((n_reps, len(queries)), dtype=np.int64)
    for r in range(n_reps):
        colors = _kernels.window_colored_packed(half_width, q, t, key,
                                                rep0 + r)
        for qi, (x, y) in enumerate(queries):
            out[r, qi] = int(np.count_nonzero((sites > y) & (colors >= -x)))
    return out


def ring_evolve_further(config: ColoredConfiguration, duration: float,
                        master_seed: int, replica: int, event0: int,
                        q: float = 0.5):
    """Continue ring dynamics; returns (new config, next event index)."""
    colors = np.asarray(config.colors, dtype=np.int64).copy()
    key = randomness.domain_key(master_seed, "replica")
    k = _kernels.ring_evolve(colors, q, float(duration), key, replica, event0)
    new = ColoredConfiguration(tuple(int(c) for c in colors), 0, "ring",
                               config.time + duration)
    return new, int(k)


def _uniform_subset(n: int, k: int, key: int, replica: int) -> list:
    """Deterministic uniform k-subset via coordinate-addressed Fisher-Yates."""
    idx = list(range(n))
    for i in range(k):
        u = randomness.uniform_at(key, replica, -1 - i, 7)
        j = i + int(u * (n - i))
        j = min(j, n - 1)
        idx[i], idx[j] = idx[j], idx[i]
    return idx[:k]
