"""Clock-driven colored exclusion dynamics (the coupling-exact path)."""

from __future__ import annotations

import math
from dataclasses import dataclass, field, replace

import numpy as np

from .. import randomness


class WindowTooSmallError(Exception):
    """A query left the window region certified by the finite-speed policy."""


@dataclass(frozen=True)
class BernoulliPath:
    """Integer path on ``lo..hi`` with increments in {0, -1}."""

    lo: int
    values: tuple

    def __post_init__(self):
        diffs = [b - a for a, b in zip(self.values, self.values[1:])]
        if any(d not in (0, -1) for d in diffs):
            raise ValueError("increments of a Bernoulli path must be 0 or -1")

    @property
    def hi(self) -> int:
        return self.lo + len(self.values) - 1

    def value(self, x: int) -> int:
        if not (self.lo <= x <= self.hi):
            raise IndexError("path queried outside its domain")
        return self.values[x - self.lo]

    def occupancy(self) -> np.ndarray:
        """Particles live at sites lo+1..hi: 1 where the path steps down."""
        v = np.asarray(self.values, dtype=np.int64)
        return (v[:-1] - v[1:]).astype(np.int8)


def step_profile(x: int, lo: int, hi: int) -> BernoulliPath:
    """The step path h0(z) = (x - z) 1{z <= x} restricted to lo..hi."""
    vals = tuple((x - z) if z <= x else 0 for z in range(lo, hi + 1))
    return BernoulliPath(lo, vals)


@dataclass(frozen=True)
class ColoredConfiguration:
    """Sitewise colors on a window (lo..hi) or a ring (sites 0..size-1)."""

    colors: tuple
    lo: int = 0
    boundary_mode: str = "padded_window"  # or "ring"
    time: float = 0.0

    def __post_init__(self):
        if self.boundary_mode not in ("padded_window", "ring"):
            raise ValueError("boundary_mode must be padded_window or ring")

    @property
    def hi(self) -> int:
        return self.lo + len(self.colors) - 1

    @property
    def sites(self) -> range:
        return range(self.lo, self.hi + 1)

    def color_at(self, z: int) -> int:
        if self.boundary_mode == "ring":
            return self.colors[z % len(self.colors)]
        if not (self.lo <= z <= self.hi):
            raise WindowTooSmallError(f"site {z} outside window")
        return self.colors[z - self.lo]

    def array(self) -> np.ndarray:
        return np.asarray(self.colors, dtype=np.int64)


def packed_configuration(half_width: int) -> ColoredConfiguration:
    """Color -k at site k on -half_width..half_width."""
    return ColoredConfiguration(
        tuple(-k for k in range(-half_width, half_width + 1)), -half_width)


def ring_configuration(color_counts: dict, size: int) -> ColoredConfiguration:
    """Blocked ring start: decreasing color blocks, then holes (color 0)."""
    total = sum(color_counts.values())
    if total > size:
        raise ValueError(f"ring overfull: {total} particles on {size} sites")
    if any(c <= 0 for c in color_counts):
        raise ValueError("particle colors must be positive")
    colors = []
    for c in sorted(color_counts, reverse=True):
        colors.extend([c] * color_counts[c])
    colors.extend([0] * (size - total))
    return ColoredConfiguration(tuple(colors), 0, "ring")


def required_half_width(t: float, observation_radius: int) -> int:
    """Window policy: half-width ceil(4t) + radius + 8."""
    return math.ceil(4 * t) + observation_radius + 8


def certified_radius(half_width: int, t: float) -> int:
    """Largest |site| whose state is unaffected by the frozen boundary."""
    return half_width - math.ceil(4 * t) - 8


def _events_for(seed_spec, sites, t0: float, t1: float, q: float):
    times, ev_sites, dirs = randomness.merged_clock_arrays(seed_spec, sites, t1, q)
    keep = times > t0
    return times[keep], ev_sites[keep], dirs[keep]


def evolve(config: ColoredConfiguration, seed: int | randomness.SeedSpec,
           t: float, q: float = 0.0, debug: bool = False
           ) -> ColoredConfiguration:
    """State at time ``t`` under the swap dynamics, pathwise in the clocks.

    A right ring at x swaps (x, x+1) iff color(x) > color(x+1); a left ring
    at x swaps (x-1, x) iff color(x) > color(x-1).  Evolution is resumable:
    evolving to s and then to t equals evolving to t directly.  With
    ``debug`` the color multiset is asserted after every event.
    """
    if t < config.time:
        raise ValueError("cannot evolve backwards")
    if t == config.time:
        return config
    spec = _clock_spec(seed)
    colors = list(config.colors)
    reference = sorted(colors) if debug else None
    n = len(colors)
    ring = config.boundary_mode == "ring"
    times, ev_sites, dirs = _events_for(spec, config.sites, config.time, t, q)
    for site, d in zip(ev_sites, dirs):
        i = int(site) - config.lo
        if d == randomness.DIR_RIGHT:
            j = i + 1
        else:
            j = i - 1
        if ring:
            j %= n
        elif not (0 <= j < n):
            continue  # frozen beyond the window
        if colors[i] > colors[j]:
            colors[i], colors[j] = colors[j], colors[i]
        if debug and sorted(colors) != reference:
            raise AssertionError("color conservation broken mid-event")
    return replace(config, colors=tuple(colors), time=float(t))


def _clock_spec(seed) -> randomness.SeedSpec:
    if isinstance(seed, randomness.SeedSpec):
        return seed
    return randomness.SeedSpec(int(seed), "asep_clock")


def colored_height(config: ColoredConfiguration, x: int, y: int) -> int:
    """#{z > y : color(z) >= -x} for a packed-type window configuration."""
    if config.boundary_mode != "padded_window":
        raise ValueError("colored heights are defined for window mode")
    rad = certified_radius(max(config.hi, -config.lo), config.time)
    if abs(x) > rad or abs(y) > rad:
        raise WindowTooSmallError(
            f"query ({x}, {y}) outside certified radius {rad}")
    arr = config.array()
    sites = np.arange(config.lo, config.hi + 1)
    return int(np.count_nonzero((sites > y) & (arr >= -x)))


@dataclass(frozen=True)
class HeightField:
    """Evaluations (y, t) -> h for one initial profile under the coupling."""

    origin: str
    start_time: float
    values: dict = field(compare=False)

    def at(self, y: int, t: float) -> int:
        return self.values[(y, float(t))]

    def profile(self, t: float):
        ys = sorted(y for (y, tt) in self.values if tt == float(t))
        return ys, [self.values[(y, float(t))] for y in ys]


def _run_uncolored(h0: BernoulliPath, s: float, spec, t: float, q: float,
                   record_times, events=None):
    """Evolve one occupancy with running height bookkeeping.

    The height at y gains 1 when a particle jumps y -> y+1 and the height
    at y-1 loses 1 when a particle jumps y -> y-1.
    """
    lo, hi = h0.lo, h0.hi
    occ = np.zeros(hi - lo + 1, dtype=np.int8)  # occupancy of sites lo+1..hi
    occ[1:] = h0.occupancy()
    heights = np.asarray(h0.values, dtype=np.int64).copy()
    if events is None:
        events = _events_for(spec, range(lo + 1, hi + 1), s, t, q)
    times, ev_sites, dirs = events
    keep = (times > s) & (times <= t)
    times, ev_sites, dirs = times[keep], ev_sites[keep], dirs[keep]
    snapshots = {}
    record = sorted(set(record_times))
    ri = 0
    for k in range(times.size):
        while ri < len(record) and times[k] > record[ri]:
            snapshots[record[ri]] = heights.copy()
            ri += 1
        i = int(ev_sites[k]) - lo
        if dirs[k] == randomness.DIR_RIGHT:
            if i + 1 <= hi - lo and occ[i] == 1 and occ[i + 1] == 0:
                occ[i], occ[i + 1] = 0, 1
                heights[i] += 1
        else:
            if i - 1 >= 1 and occ[i] == 1 and occ[i - 1] == 0:
                occ[i], occ[i - 1] = 0, 1
                heights[i - 1] -= 1
    while ri < len(record):
        snapshots[record[ri]] = heights.copy()
        ri += 1
    return snapshots


def height_from_profile(h0: BernoulliPath, s: float, seed, y: int, t: float,
                        q: float = 0.0) -> int:
    """h(h0, s; y, t) for one profile; exact jump-count bookkeeping."""
    if not (t >= s >= 0):
        raise ValueError("need t >= s >= 0")
    spec = _clock_spec(seed)
    snaps = _run_uncolored(h0, s, spec, t, q, [t])
    return int(snaps[t][y - h0.lo])


def height_profile(h0: BernoulliPath, s: float, seed, t: float,
                   q: float = 0.0) -> np.ndarray:
    spec = _clock_spec(seed)
    return _run_uncolored(h0, s, spec, t, q, [t])[t]


def basic_couple(inits, seed, t: float, q: float = 0.0,
                 record_times=None) -> list:
    """Drive many (profile, start-time) pairs with the same clock streams.

    ``inits`` is a list of (BernoulliPath, s).  All windows must coincide.
    Returns one :class:`HeightField` per initial condition, evaluated at
    the requested times (default: only ``t``).
    """
    if not inits:
        return []
    lo, hi = inits[0][0].lo, inits[0][0].hi
    if any((p.lo, p.hi) != (lo, hi) for p, _ in inits):
        raise ValueError("all coupled profiles must share one window")
    spec = _clock_spec(seed)
    record = list(record_times) if record_times is not None else [t]
    events = _events_for(spec, range(lo + 1, hi + 1), 0.0, t, q)
    fields = []
    for idx, (h0, s) in enumerate(inits):
        snaps = _run_uncolored(h0, s, spec, t, q,
                               [r for r in record if r >= s], events=events)
        values = {}
        for tt, arr in snaps.items():
            for y in range(lo, hi + 1):
                values[(y, float(tt))] = int(arr[y - lo])
        fields.append(HeightField(f"init[{idx}]", float(s), values))
    return fields


def merge_colors(config: ColoredConfiguration, tau) -> ColoredConfiguration:
    """Apply a weakly monotone color map sitewise.

    Commutes pathwise with :func:`evolve` under a shared seed.
    """
    present = sorted(set(config.colors))
    mapped = [tau(c) for c in present]
    if any(b < a for a, b in zip(mapped, mapped[1:])):
        raise ValueError("merge map must be weakly monotone on the colors present")
    return replace(config, colors=tuple(tau(c) for c in config.colors))
