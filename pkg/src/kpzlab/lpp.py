"""Last passage percolation across curve environments, and the Pitman
transform whose iterates realize it.

Environments are families of piecewise-linear curves with integer
breakpoints on a common interval; a path starts on a lower curve, jumps
upward through consecutive curves at weakly increasing times, and collects
the increments of each curve between its jump times.  For piecewise-linear
input the objective is piecewise linear in every jump time, so the optimum
is attained at breakpoints and dynamic programming over the integer grid is
exact.
"""

from __future__ import annotations

from dataclasses import dataclass
from itertools import combinations_with_replacement

import numpy as np


@dataclass(frozen=True)
class Environment:
    """Curves ``values[i]`` sampled on the integer grid ``lo..hi``.

    Curve 1 is the top curve (index 1-based in queries, matching the jump
    order bottom curve -> top curve).
    """

    lo: int
    values: tuple  # tuple of tuples of numbers, all equal length

    def __post_init__(self):
        if not self.values:
            raise ValueError("environment needs at least one curve")
        n = len(self.values[0])
        if any(len(v) != n for v in self.values):
            raise ValueError("curves must share the grid")

    @property
    def hi(self) -> int:
        return self.lo + len(self.values[0]) - 1

    @property
    def n_curves(self) -> int:
        return len(self.values)

    def curve(self, i: int) -> np.ndarray:
        if not (1 <= i <= self.n_curves):
            raise IndexError("curve index out of range")
        return np.asarray(self.values[i - 1], dtype=float)

    @staticmethod
    def from_arrays(lo: int, arrays) -> "Environment":
        return Environment(lo, tuple(tuple(float(x) for x in a) for a in arrays))


def lpp_value(env: Environment, u: int, k: int, v: int, j: int) -> float:
    """Maximal collected increment from (u, k) to (v, j), j < k.

    Computed by sweeping curves k down to j with a running maximum; each
    sweep is one Pitman-type relaxation over the grid.  ``j == k`` is the
    single-curve case f_j(v) - f_j(u).
    """
    if not (1 <= j <= k <= env.n_curves):
        raise IndexError("need 1 <= j <= k <= number of curves")
    if not (env.lo <= u < v <= env.hi):
        raise ValueError("need lo <= u < v <= hi on the environment grid")
    iu, iv = u - env.lo, v - env.lo
    f = env.curve(k)
    best = f[iu : iv + 1].copy()
    best -= best[0]  # value of staying on curve k up to each grid point
    for i in range(k - 1, j - 1, -1):
        g = env.curve(i)[iu : iv + 1]
        best = g + np.maximum.accumulate(best - g)
    return float(best[-1])


def lpp_value_bruteforce(env: Environment, u: int, k: int, v: int, j: int) -> float:
    """Independent oracle: enumerate all weakly increasing jump tuples."""
    if not (1 <= j <= k <= env.n_curves):
        raise IndexError("need 1 <= j <= k <= number of curves")
    grid = list(range(u, v + 1))
    best = -np.inf
    n_jumps = k - j  # jump times t_{k-1} >= ... >= t_j between u and v
    for mids in combinations_with_replacement(grid, n_jumps):
        ts = [u] + list(mids) + [v]  # t_k, t_{k-1}, ..., t_j, t_{j-1}
        total = 0.0
        for step, i in enumerate(range(k, j - 1, -1)):
            c = env.curve(i)
            total += c[ts[step + 1] - env.lo] - c[ts[step] - env.lo]
        best = max(best, total)
    return float(best)


def pitman(f, g) -> np.ndarray:
    """PT(f, g)(y) = f(y) + max_{0 <= y' <= y} (g(y') - f(y'))."""
    f = np.asarray(f, dtype=float)
    g = np.asarray(g, dtype=float)
    if f.shape != g.shape:
        raise ValueError("paths must share their domain")
    return f + np.maximum.accumulate(g - f)


def pitman_iter(curves, g) -> np.ndarray:
    """Iterated transform across ``curves = (f_1, ..., f_k)`` above ``g``.

    Equals pointwise the variational form
    ``max_{z <= y} (g(z) + env[(z, k) -> (y, 1)])`` on integer grids.
    """
    out = np.asarray(g, dtype=float)
    for f in reversed(list(curves)):
        out = pitman(np.asarray(f, dtype=float), out)
    return out


def lpp_from_zero(env: Environment, g) -> np.ndarray:
    """``y -> max_{z <= y} (g(z) + env[(z, n) -> (y, 1)])`` over the grid.

    The z = y term is interpreted as g(y) plus an empty traversal when the
    jump times collapse; computed by the same running-max sweeps as
    :func:`lpp_value` but keeping the whole profile.
    """
    g = np.asarray(g, dtype=float)
    k = env.n_curves
    if g.shape[0] != env.hi - env.lo + 1:
        raise ValueError("g must live on the environment grid")
    best = g.copy()
    for i in range(k, 0, -1):
        c = env.curve(i)
        best = c + np.maximum.accumulate(best - c)
    return best


def pitman_deviation(ensemble_total, ensemble_high, k: int) -> float:
    """Sup-norm gap between the high-color top curve and its LPP form.

    ``ensemble_total`` supplies the environment curves 1..k (total arrow
    counts); ``ensemble_high`` supplies the high-color curves, of which
    curve k+1 is the LPP boundary data and curve 1 the compared profile.
    The one-sided inequality curve >= transform holds deterministically;
    at q = 0 the gap is exactly zero.
    """
    env = Environment.from_arrays(0, [ensemble_total.curves[i] for i in range(k)])
    g = np.asarray(ensemble_high.curves[k], dtype=float)
    target = np.asarray(ensemble_high.curves[0], dtype=float)
    approx = lpp_from_zero(env, g)
    return float(np.max(np.abs(target - approx)))


def pitman_lower_bound_violation(ensemble_total, ensemble_high) -> float:
    """Max over k, y of PT(total_k, high_{k+1})(y) - high_k(y); <= 0 always."""
    worst = -np.inf
    n = len(ensemble_high.curves) - 1
    for k in range(1, n + 1):
        f = np.asarray(ensemble_total.curves[k - 1], dtype=float)
        g = np.asarray(ensemble_high.curves[k], dtype=float)
        target = np.asarray(ensemble_high.curves[k - 1], dtype=float)
        worst = max(worst, float(np.max(pitman(f, g) - target)))
    return worst


def crossing_check(env: Environment, z_grid, y1: int, y2: int,
                   k: int | None = None) -> bool:
    """Is z -> env[(z,k)->(y1,1)] - env[(z,k)->(y2,1)] non-increasing?"""
    if y1 >= y2:
        raise ValueError("need y1 < y2")
    k = env.n_curves if k is None else k
    diffs = []
    for z in z_grid:
        d = lpp_value(env, z, k, y1, 1) - lpp_value(env, z, k, y2, 1)
        diffs.append(d)
    return all(b <= a + 1e-9 for a, b in zip(diffs, diffs[1:]))


def modified_lpp_monotone(env: Environment, z_grid, x: int,
                          k: int | None = None) -> bool:
    """Is z -> env[(z,k)->(x,1)] + f_k(z) non-increasing?"""
    k = env.n_curves if k is None else k
    f_k = env.curve(k)
    vals = [lpp_value(env, z, k, x, 1) + f_k[z - env.lo] for z in z_grid]
    return all(b <= a + 1e-9 for a, b in zip(vals, vals[1:]))
