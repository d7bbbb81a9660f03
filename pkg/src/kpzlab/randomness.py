"""Deterministic, coordinate-addressed random streams.

Every random draw in the package is a pure function of one 64-bit master
seed, a stream domain, and integer coordinates.  Draws at distinct
coordinates come from independent invocations of a 64-bit avalanche mixer
(the murmur3 finalizer), so the graphical construction and the basic
coupling are pathwise reproducible: attaching randomness to sites and
vertices rather than to particles is what makes couplings across initial
conditions and color merges automatic.

Three implementations of the mixer exist (scalar Python, vectorized NumPy,
and the numba-compiled copies inside the kernels) and produce bit-identical
output; ``tests/test_randomness.py`` pins that equivalence.

Not cryptographic; not intended to be.
"""

from __future__ import annotations

import math
from dataclasses import dataclass

import numpy as np

_MASK = (1 << 64) - 1

# Per-position multipliers decorrelate the coordinate slots before each
# avalanche round.
_W0_MULT = 0x9E3779B97F4A7C15
_W1_MULT = 0xBF58476D1CE4E5B9
_W2_MULT = 0x94D049BB133111EB
_FMIX_A = 0xFF51AFD7ED558CCD
_FMIX_B = 0xC4CEB9FE1A85EC53

STREAM_DOMAINS = {
    "asep_clock": 0x636C6F636B730001,
    "s6v_coin": 0x73367663306E0002,
    "replica": 0x7265706C69630003,
}

# Coordinate tags (third/second hash words).
DIR_LEFT = 1
DIR_RIGHT = 2
COIN_UP = 1
COIN_RIGHT = 2


def _fmix64(z: int) -> int:
    z ^= z >> 33
    z = (z * _FMIX_A) & _MASK
    z ^= z >> 33
    z = (z * _FMIX_B) & _MASK
    return z ^ (z >> 33)


def hash_coords(key: int, w0: int, w1: int, w2: int) -> int:
    """Mix a domain key with three signed integer coordinates into 64 bits."""
    h = key & _MASK
    h = _fmix64(h ^ ((w0 & _MASK) * _W0_MULT & _MASK))
    h = _fmix64(h ^ ((w1 & _MASK) * _W1_MULT & _MASK))
    h = _fmix64(h ^ ((w2 & _MASK) * _W2_MULT & _MASK))
    return h


def uniform_at(key: int, w0: int, w1: int, w2: int) -> float:
    """Uniform draw in the open interval (0, 1) at integer coordinates."""
    return ((hash_coords(key, w0, w1, w2) >> 11) + 0.5) * 2.0**-53


def _fmix64_array(h: np.ndarray) -> np.ndarray:
    h ^= h >> np.uint64(33)
    h *= np.uint64(_FMIX_A)
    h ^= h >> np.uint64(33)
    h *= np.uint64(_FMIX_B)
    h ^= h >> np.uint64(33)
    return h


def _as_u64(arr) -> np.ndarray:
    return np.asarray(arr).astype(np.int64).view(np.uint64)


def hash_coords_array(key: int, w0, w1, w2) -> np.ndarray:
    """Vectorized :func:`hash_coords` over equal-length coordinate arrays."""
    h = np.uint64(key & _MASK) ^ (_as_u64(w0) * np.uint64(_W0_MULT))
    h = _fmix64_array(h)
    h = _fmix64_array(h ^ (_as_u64(w1) * np.uint64(_W1_MULT)))
    h = _fmix64_array(h ^ (_as_u64(w2) * np.uint64(_W2_MULT)))
    return h


def uniform_array(key: int, w0, w1, w2) -> np.ndarray:
    h = hash_coords_array(key, w0, w1, w2)
    return ((h >> np.uint64(11)).astype(np.float64) + 0.5) * 2.0**-53


@dataclass(frozen=True)
class SeedSpec:
    """One reproducible stream: a 64-bit master seed plus a stream domain."""

    master_seed: int
    stream_domain: str

    def __post_init__(self):
        if self.stream_domain not in STREAM_DOMAINS:
            raise ValueError(
                f"unknown stream domain {self.stream_domain!r}; "
                f"expected one of {sorted(STREAM_DOMAINS)}"
            )

    @property
    def key(self) -> int:
        return (self.master_seed & _MASK) ^ STREAM_DOMAINS[self.stream_domain]


def domain_key(master_seed: int, stream_domain: str) -> int:
    """Domain key for kernels that hash coordinates themselves."""
    return SeedSpec(master_seed, stream_domain).key


@dataclass(frozen=True)
class ClockEvent:
    site: int
    direction: str  # "left" | "right"
    time: float


@dataclass(frozen=True)
class VertexCoins:
    x: int
    y: int
    up_coin: int
    right_coin: int


def b_up(q: float, z: float) -> float:
    """Probability that the higher-colored arrow goes straight vertically."""
    return q * (1.0 - z) / (1.0 - q * z)


def b_right(q: float, z: float) -> float:
    """Probability that the higher-colored arrow goes straight horizontally."""
    return (1.0 - z) / (1.0 - q * z)


def _validate_clock_seed(seed: SeedSpec):
    if seed.stream_domain != "asep_clock":
        raise ValueError("clock events require the 'asep_clock' stream domain")


def clock_times(seed: SeedSpec, site: int, direction: int, rate: float,
                horizon: float) -> np.ndarray:
    """Strictly increasing Poisson(rate) event times in (0, horizon].

    Gap ``i`` of the sequence is a fixed function of ``(seed, site,
    direction, i)``, so extending the horizon appends events without
    perturbing earlier ones.
    """
    _validate_clock_seed(seed)
    if horizon <= 0:
        raise ValueError("horizon must be positive")
    if rate < 0:
        raise ValueError("rate must be nonnegative")
    if rate == 0.0:
        return np.empty(0, dtype=np.float64)
    key = seed.key
    times: list[np.ndarray] = []
    total = 0.0
    start = 0
    block = max(16, int(horizon * rate * 1.5) + 16)
    while True:
        idx = np.arange(start, start + block, dtype=np.int64)
        u = uniform_array(key, np.full(block, site, dtype=np.int64),
                          np.full(block, direction, dtype=np.int64), idx)
        gaps = -np.log(u) / rate
        t = total + np.cumsum(gaps)
        times.append(t)
        total = t[-1]
        start += block
        if total > horizon:
            break
    all_t = np.concatenate(times)
    return all_t[all_t <= horizon]


def clock_events(seed: SeedSpec, site: int, horizon: float,
                 q: float = 0.0) -> list[ClockEvent]:
    """All Poisson-clock rings at one site up to ``horizon``.

    Right rings arrive at rate 1, left rings at rate ``q``; the two
    sequences are independent across sites and directions.
    """
    right = clock_times(seed, site, DIR_RIGHT, 1.0, horizon)
    left = clock_times(seed, site, DIR_LEFT, q, horizon)
    events = [ClockEvent(site, "right", float(t)) for t in right]
    events += [ClockEvent(site, "left", float(t)) for t in left]
    events.sort(key=lambda e: (e.time, e.direction))
    return events


def merged_clock_arrays(seed: SeedSpec, sites, horizon: float, q: float):
    """Time-ordered rings for many sites: ``(times, sites, dirs)`` arrays.

    Simultaneity has probability zero; ties are nevertheless broken by
    (site, direction) so that replays are deterministic.
    """
    t_parts, s_parts, d_parts = [], [], []
    for site in sites:
        for direction, rate in ((DIR_RIGHT, 1.0), (DIR_LEFT, q)):
            t = clock_times(seed, int(site), direction, rate, horizon)
            if t.size:
                t_parts.append(t)
                s_parts.append(np.full(t.size, site, dtype=np.int64))
                d_parts.append(np.full(t.size, direction, dtype=np.int8))
    if not t_parts:
        return (np.empty(0), np.empty(0, np.int64), np.empty(0, np.int8))
    times = np.concatenate(t_parts)
    sites_a = np.concatenate(s_parts)
    dirs = np.concatenate(d_parts)
    order = np.lexsort((dirs, sites_a, times))
    return times[order], sites_a[order], dirs[order]


def vertex_coins(seed: SeedSpec, q: float, z: float, x: int, y: int) -> VertexCoins:
    """The pair of Bernoulli coins attached to the vertex ``(x, y)``.

    ``up_coin`` succeeds with probability q(1-z)/(1-qz) and ``right_coin``
    with probability (1-z)/(1-qz); they drive the straight-through moves of
    the higher-colored arrow.
    """
    if seed.stream_domain != "s6v_coin":
        raise ValueError("vertex coins require the 's6v_coin' stream domain")
    if not (0.0 <= q < 1.0):
        raise ValueError("q must lie in [0, 1)")
    if not (0.0 < z < 1.0):
        raise ValueError("z must lie in (0, 1)")
    if x < 1:
        raise ValueError("column index x must be >= 1")
    key = seed.key
    u_up = uniform_at(key, 0, x, y * 2 + COIN_UP)
    u_right = uniform_at(key, 0, x, y * 2 + COIN_RIGHT)
    return VertexCoins(x, y, int(u_up < b_up(q, z)), int(u_right < b_right(q, z)))


def parse_seed(text: str) -> int:
    """Parse a decimal or hexadecimal 64-bit seed string."""
    s = text.strip().lower()
    value = int(s, 16) if s.startswith("0x") else int(s, 10)
    if not (0 <= value < 1 << 64):
        raise ValueError("seed must fit in 64 bits")
    return value


def exp_gap(u: float, rate: float) -> float:
    return -math.log(u) / rate
