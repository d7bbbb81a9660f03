"""Columnwise sampling of the colored stochastic six-vertex model.

Arrows enter horizontally on the left boundary, travel up-right, and are
resolved vertex by vertex, bottom to top within each column (the order
within an anti-diagonal does not affect the law; columnwise is the
cache-friendly deterministic choice).  At a vertex the strictly higher of
the two incident colors goes straight with probability ``b_up``
(vertically) or ``b_right`` (horizontally); the absence of an arrow is the
lowest color, so lone arrows reuse the same two coins.  Colors are 32-bit
integers with a reserved sentinel for minus infinity.

The row cap is sized so that an arrow climbing past it has probability
below 1e-9 (the top of the occupied profile rises at most one row per
column, plus a geometric(b_up) excursion); hitting the cap raises
:class:`CapExceededError` rather than truncating silently.
"""

from __future__ import annotations

import math
from dataclasses import dataclass

import numpy as np

from .. import _kernels, randomness
from .._kernels import NEG_INF32

NEG_INF = int(NEG_INF32)

CAP_EPSILON = 1e-9


class CapExceededError(Exception):
    def __init__(self, column: int, cap_row: int):
        super().__init__(
            f"an arrow climbed past the row cap {cap_row} in column {column}; "
            "enlarge row_cap or check the model parameters")
        self.column = column
        self.cap_row = cap_row


@dataclass(frozen=True)
class BoundaryCondition:
    """Left-boundary colors per row; rows above the top entry are empty."""

    low_row: int
    colors: tuple  # color entering at rows low_row, low_row+1, ...
    entry_time: int = 0  # arrows enter the column entry_time + 1 first

    @property
    def high_row(self) -> int:
        return self.low_row + len(self.colors) - 1

    @property
    def n_arrows(self) -> int:
        return sum(1 for c in self.colors if c != NEG_INF)

    @staticmethod
    def packed(n: int) -> "BoundaryCondition":
        """Color k enters at row k for k in -n..n."""
        return BoundaryCondition(-n, tuple(range(-n, n + 1)))

    @staticmethod
    def packed_positive(n: int) -> "BoundaryCondition":
        """Color k enters at row k for k in 1..n (the restricted domain)."""
        return BoundaryCondition(1, tuple(range(1, n + 1)))

    @staticmethod
    def from_heights(h0, low_row: int) -> "BoundaryCondition":
        """Two-color boundary from a height profile: arrows where it drops.

        ``h0`` is a Bernoulli path sampled on rows low_row-1..high; the
        profile must vanish at its right end (finitely many arrows).
        """
        vals = list(h0)
        if vals[-1] != 0:
            raise ValueError("boundary profile must be 0 for large rows")
        diffs = [a - b for a, b in zip(vals, vals[1:])]
        if any(d not in (0, 1) for d in diffs):
            raise ValueError("boundary profile must be a Bernoulli path")
        colors = tuple(1 if d == 1 else NEG_INF for d in diffs)
        return BoundaryCondition(low_row, colors)


def default_row_cap(boundary: BoundaryCondition, n_cols: int, q: float,
                    z: float) -> int:
    """Row above which arrows stray with probability below ``CAP_EPSILON``.

    The occupied profile's top rises at most one row per column, plus a
    geometric(b_up) excess per column; the excesses accumulate, so the
    margin covers their sum (mean plus a ten-sigma band) and a per-event
    union tail.  Rows above the band cost no time, only memory.
    """
    bu = randomness.b_up(q, z)
    if bu <= 0.0:
        margin = 2
    else:
        events = max(2, n_cols * max(1, boundary.n_arrows))
        ratio = bu / (1.0 - bu)
        mean_excess = n_cols * ratio
        margin = 4 + math.ceil(
            mean_excess + 10.0 * math.sqrt(mean_excess + 4.0)
            + math.log(events / CAP_EPSILON) / math.log(1.0 / bu))
    return boundary.high_row + n_cols + margin


@dataclass(frozen=True)
class ArrowField:
    """A sampled strip: per-column horizontal exit colors.

    ``grid[c - 1]`` holds the exits of absolute column ``entry_time + c``
    at rows ``low_row .. low_row + n_rows - 1``.
    """

    boundary: BoundaryCondition
    q: float
    z: float
    master_seed: int
    replica: int
    grid: np.ndarray  # int32, shape (n_cols, n_rows)

    @property
    def low_row(self) -> int:
        return self.boundary.low_row

    @property
    def n_cols(self) -> int:
        return self.grid.shape[0]

    @property
    def last_column(self) -> int:
        return self.boundary.entry_time + self.n_cols

    def exit_word(self, t: int) -> np.ndarray:
        """Horizontal exit colors of absolute column t."""
        c = t - self.boundary.entry_time
        if not (1 <= c <= self.n_cols):
            raise ValueError(f"column {t} was not sampled")
        return self.grid[c - 1]

    def boundary_word(self) -> np.ndarray:
        word = np.full(self.grid.shape[1], NEG_INF32, dtype=np.int32)
        for i, col in enumerate(self.boundary.colors):
            word[i] = col
        return word


def _validate_params(q: float, z: float):
    if not (0.0 <= q < 1.0):
        raise ValueError("q must lie in [0, 1)")
    if not (0.0 < z < 1.0):
        raise ValueError("z must lie in (0, 1)")


def sample(boundary: BoundaryCondition, q: float, z: float, n_cols: int,
           master_seed: int, replica: int = 0,
           row_cap: int | None = None) -> ArrowField:
    """Sample ``n_cols`` columns and keep the full exit grid."""
    _validate_params(q, z)
    if row_cap is None:
        row_cap = default_row_cap(boundary, n_cols, q, z)
    n_rows = row_cap - boundary.low_row + 1
    word = np.full(n_rows, NEG_INF32, dtype=np.int32)
    for i, col in enumerate(boundary.colors):
        word[i] = col
    grid = np.empty((n_cols, n_rows), dtype=np.int32)
    key = randomness.domain_key(master_seed, "s6v_coin")
    status = _kernels.s6v_sweep(word, boundary.low_row,
                                boundary.entry_time + 1, n_cols,
                                randomness.b_up(q, z), randomness.b_right(q, z),
                                key, replica, grid, 1)
    if status != 0:
        raise CapExceededError(int(status), row_cap)
    return ArrowField(boundary, q, z, master_seed, replica, grid)


def colored_height(field: ArrowField, x: int, y: int, t: int) -> int:
    """#{rows k > y : exit color of column t at row k >= x}."""
    word = field.exit_word(t)
    rows = np.arange(field.low_row, field.low_row + word.shape[0])
    return int(np.count_nonzero((rows > y) & (word >= x)))


def heights_batch(boundary: BoundaryCondition, q: float, z: float,
                  n_cols: int, master_seed: int, n_reps: int, queries,
                  rep0: int = 0, row_cap: int | None = None) -> np.ndarray:
    """Final-column heights for many replicas.

    ``queries`` is a list of (threshold color x, cut row y); returns an
    (n_reps, n_queries) array of h(x, 0; y, n_cols).
    """
    _validate_params(q, z)
    if row_cap is None:
        row_cap = default_row_cap(boundary, n_cols, q, z)
    n_rows = row_cap - boundary.low_row + 1
    word0 = np.full(n_rows, NEG_INF32, dtype=np.int32)
    for i, col in enumerate(boundary.colors):
        word0[i] = col
    thr = np.array([int(xq) for xq, _ in queries], dtype=np.int64)
    cuts = np.array([int(yq) for _, yq in queries], dtype=np.int64)
    out = np.empty((n_reps, len(queries)), dtype=np.int64)
    key = randomness.domain_key(master_seed, "s6v_coin")
    status = _kernels.s6v_heights_batch(
        word0, boundary.low_row, n_cols, randomness.b_up(q, z),
        randomness.b_right(q, z), key, rep0, n_reps, thr, cuts, out)
    if status != 0:
        raise CapExceededError(int(status), row_cap)
    return out


def height_general(h0, low_row: int, s: int, master_seed: int, y: int, t: int,
                   q: float = 0.5, z: float = 0.5, replica: int = 0) -> int:
    """Height from a general initial profile started at column time ``s``.

    The profile is converted to a two-color boundary entering at column
    s+1; under a shared seed the evolutions from different (h0, s) are
    coupled through the same vertex coins.
    """
    if t <= s:
        raise ValueError("need t > s")
    bc = BoundaryCondition.from_heights(h0, low_row)
    bc = BoundaryCondition(bc.low_row, bc.colors, entry_time=int(s))
    field = sample(bc, q, z, t - s, master_seed, replica)
    return colored_height(field, 1, y, t)


def threshold_merge(threshold: int):
    """The monotone map sending colors >= threshold to 1, the rest to -inf."""
    def tau(c: int) -> int:
        if c == NEG_INF:
            return NEG_INF
        return 1 if c >= threshold else NEG_INF
    return tau


def merge_colors(field: ArrowField, tau) -> ArrowField:
    """Apply a weakly monotone color map to every arrow of the field.

    Under shared coins this commutes pathwise with sampling: merging the
    boundary first and sampling gives the same grid.
    """
    _validate_merge_map(tau, field)
    remap = {NEG_INF: _map_color(tau, NEG_INF)}
    grid = field.grid.copy()
    for c in np.unique(field.grid):
        remap[int(c)] = _map_color(tau, int(c))
    for c, v in remap.items():
        grid[field.grid == c] = v
    colors = tuple(_map_color(tau, c) for c in field.boundary.colors)
    bc = BoundaryCondition(field.boundary.low_row, colors,
                           field.boundary.entry_time)
    return ArrowField(bc, field.q, field.z, field.master_seed, field.replica,
                      grid)


def merge_boundary(boundary: BoundaryCondition, tau) -> BoundaryCondition:
    colors = tuple(_map_color(tau, c) for c in boundary.colors)
    return BoundaryCondition(boundary.low_row, colors, boundary.entry_time)


def _map_color(tau, c: int) -> int:
    out = tau(c)
    return NEG_INF if out == NEG_INF else int(out)


def _validate_merge_map(tau, field: ArrowField):
    present = sorted({int(c) for c in np.unique(field.grid)}
                     | set(field.boundary.colors))
    mapped = [_map_color(tau, c) for c in present]
    if any(b < a for a, b in zip(mapped, mapped[1:])):
        raise ValueError("merge map must be weakly monotone")


@dataclass(frozen=True)
class DegenerationParams:
    """Small-z corner scaling that recovers the exclusion process.

    With ``z = (1 - delta)/(1 - delta q)`` the straight-through
    probabilities become ``q delta`` (vertical) and ``delta`` (horizontal);
    reading the height near the corner (N, N) with ``N = floor(t / delta)``
    reproduces the exclusion height at time t as delta -> 0.  ``theta`` is
    the asymptotic-regime exponent (delta = t^-theta there); at desk scale
    delta is supplied directly.
    """

    t: float
    delta: float
    q: float
    theta: float = 40.0

    def __post_init__(self):
        if not (0.0 < self.delta < 1.0):
            raise ValueError("delta must lie in (0, 1)")
        if not (0.0 <= self.q < 1.0):
            raise ValueError("q must lie in [0, 1)")
        if self.t <= 0:
            raise ValueError("t must be positive")

    @property
    def z(self) -> float:
        return (1.0 - self.delta) / (1.0 - self.delta * self.q)

    @property
    def n(self) -> int:
        return int(self.t / self.delta)


def asep_degeneration(params: DegenerationParams, master_seed: int, x: int,
                      y: int, replica: int = 0) -> int:
    """The corner-read proxy for the exclusion height at (x, y, t).

    Equals ``N + x + 1 - h(-x, 0; N - y - 1, N)`` where the strip has the
    packed boundary; queries are certified only for |x|, |y| <= 2t.
    """
    if abs(x) > 2 * params.t or abs(y) > 2 * params.t:
        raise ValueError("degeneration queries are certified for |x|,|y| <= 2t")
    return int(degeneration_proxy_samples(params, master_seed, x, y, 1,
                                          rep0=replica)[0])


def degeneration_proxy_samples(params: DegenerationParams, master_seed: int,
                               x: int, y: int, n_reps: int,
                               rep0: int = 0) -> np.ndarray:
    """Replicated proxy heights ``N + x + 1 - h(-x, 0; N - y - 1, N)``.

    Merging every color below -x into absence leaves the law of the count
    unchanged and shrinks the strip to the rows -x..N.
    """
    n = params.n
    boundary = BoundaryCondition(-x, tuple([1] * (n + x + 1)))
    h = heights_batch(boundary, params.q, params.z, n, master_seed,
                      n_reps, [(1, n - y - 1)], rep0=rep0)[:, 0]
    return n + x + 1 - h
