"""Hot inner loops, numba-compiled when the numba backend is active.

Each kernel draws its randomness through ``_unif``, a counter-addressed
uniform identical bit-for-bit to :func:`kpzlab.randomness.uniform_at`; the
pure fallback simply uses that function, so both backends reproduce the
same trajectories draw by draw.
"""

from __future__ import annotations

import math

import numpy as np

from . import randomness
from .backend import USING_NUMBA, njit

NEG_INF32 = np.int32(-(2**31) + 1)  # color sentinel for "no arrow"


def _hash_impl(key, w0, w1, w2):
    h = np.uint64(key) ^ (np.uint64(w0) * np.uint64(0x9E3779B97F4A7C15))
    h ^= h >> np.uint64(33)
    h *= np.uint64(0xFF51AFD7ED558CCD)
    h ^= h >> np.uint64(33)
    h *= np.uint64(0xC4CEB9FE1A85EC53)
    h ^= h >> np.uint64(33)
    h ^= np.uint64(w1) * np.uint64(0xBF58476D1CE4E5B9)
    h ^= h >> np.uint64(33)
    h *= np.uint64(0xFF51AFD7ED558CCD)
    h ^= h >> np.uint64(33)
    h *= np.uint64(0xC4CEB9FE1A85EC53)
    h ^= h >> np.uint64(33)
    h ^= np.uint64(w2) * np.uint64(0x94D049BB133111EB)
    h ^= h >> np.uint64(33)
    h *= np.uint64(0xFF51AFD7ED558CCD)
    h ^= h >> np.uint64(33)
    h *= np.uint64(0xC4CEB9FE1A85EC53)
    h ^= h >> np.uint64(33)
    return h


if USING_NUMBA:
    _hash = njit(inline="always")(_hash_impl)

    @njit(inline="always")
    def _unif(key, w0, w1, w2):
        h = _hash(key, w0, w1, w2)
        return (np.float64(h >> np.uint64(11)) + 0.5) * 2.0**-53

    @njit(inline="always")
    def _two_unifs(key, w0, w1, w2):
        """Two uniforms from one hash: the 32-bit lanes of the mixed word."""
        h = _hash(key, w0, w1, w2)
        hi = np.float64(h >> np.uint64(32))
        lo = np.float64(h & np.uint64(0xFFFFFFFF))
        return (hi + 0.5) * 2.0**-32, (lo + 0.5) * 2.0**-32
else:
    def _unif(key, w0, w1, w2):  # python ints avoid numpy scalar overflow
        return randomness.uniform_at(int(key), int(w0), int(w1), int(w2))

    def _two_unifs(key, w0, w1, w2):
        h = randomness.hash_coords(int(key), int(w0), int(w1), int(w2))
        return (((h >> 32) + 0.5) * 2.0**-32,
                ((h & 0xFFFFFFFF) + 0.5) * 2.0**-32)


# --------------------------------------------------------------------------
# colored stochastic six-vertex column sweeps
# --------------------------------------------------------------------------

@njit
def s6v_sweep(word, low_row, col_start, n_cols, b_up, b_right, key, rep,
              grid_out, record):
    """Advance a horizontal color word through ``n_cols`` columns in place.

    ``word[r]`` is the color (NEG_INF32 for none) crossing into the current
    column at absolute row ``low_row + r``.  Returns 0, or the failing
    column if an arrow climbs past the top of the array.  When ``record``
    is nonzero the exit word of every column is copied into ``grid_out``.

    Arrows only move up, so the occupied band [lo, top] is tracked and
    rows outside it are never visited; coins are coordinate-addressed, so
    the skipping cannot change the trajectory.
    """
    n_rows = word.shape[0]
    lo = 0
    top = -1
    for r in range(n_rows):
        if word[r] != NEG_INF32:
            top = r
    while lo < n_rows and word[lo] == NEG_INF32:
        lo += 1
    for step in range(n_cols):
        x = col_start + step
        carry = NEG_INF32
        r = lo
        while r < n_rows:
            if r > top and carry == NEG_INF32:
                break
            i = word[r]
            a = carry
            if a != i:
                row = low_row + r
                if a > i:
                    u = _unif(key, rep, x, row * 2 + 1)
                    straight = u < b_up
                else:
                    u = _unif(key, rep, x, row * 2 + 2)
                    straight = u < b_right
                if not straight:
                    word[r] = a
                    carry = i
                    if a != NEG_INF32 and r > top:
                        top = r
            r += 1
        if carry != NEG_INF32:
            return x
        while lo < n_rows and word[lo] == NEG_INF32:
            lo += 1
            if lo > top:
                break
        if record != 0:
            for r in range(n_rows):
                grid_out[step, r] = word[r]
    return 0


@njit
def s6v_heights_batch(word0, low_row, n_cols, b_up, b_right, key, rep0,
                      n_reps, thresholds, cuts, out):
    """Sample ``n_reps`` independent fields; count exits of color >= thr
    strictly above each cut row at the final column.  Returns 0 or the
    failing column of the first replica that overflows the row cap."""
    n_rows = word0.shape[0]
    word = np.empty(n_rows, dtype=np.int32)
    dummy = np.empty((1, 1), dtype=np.int32)
    nq = thresholds.shape[0]
    for rep in range(rep0, rep0 + n_reps):
        word[:] = word0
        status = s6v_sweep(word, low_row, 1, n_cols, b_up, b_right, key, rep,
                           dummy, 0)
        if status != 0:
            return status
        for qi in range(nq):
            cnt = 0
            for r in range(n_rows):
                if low_row + r > cuts[qi] and word[r] >= thresholds[qi]:
                    cnt += 1
            out[rep - rep0, qi] = cnt
    return 0


# --------------------------------------------------------------------------
# exclusion-process kernels
# --------------------------------------------------------------------------

@njit
def window_colored_packed(half_width, q, horizon, key, rep):
    """Colored dynamics from the packed state on a frozen-boundary window.

    Colors are distinct, so every bond is always executable in exactly one
    direction: descents (left color higher) swap at rate 1, ascents at
    rate q.  Returns the color array over sites -L..L at the horizon.
    """
    n = 2 * half_width + 1
    colors = np.empty(n, dtype=np.int32)
    for i in range(n):
        colors[i] = half_width - i  # color -site
    n_bonds = n - 1
    d_list = np.empty(n_bonds, dtype=np.int32)
    d_pos = np.full(n_bonds, -1, dtype=np.int32)
    a_list = np.empty(n_bonds, dtype=np.int32)
    a_pos = np.full(n_bonds, -1, dtype=np.int32)
    n_d = 0
    n_a = 0
    for b in range(n_bonds):
        n_d = _set_add(d_list, d_pos, n_d, b)  # packed start is descending
    t = 0.0
    k = 0
    while True:
        rate = n_d + q * n_a
        if rate <= 0.0:
            break
        u_time, u_move = _two_unifs(key, rep, k, 0)
        t += -math.log(u_time) / rate
        if t > horizon:
            break
        k += 1
        u = u_move * rate
        if u < n_d:
            i = int(u)
            if i >= n_d:
                i = n_d - 1
            b = d_list[i]
        else:
            i = int((u - n_d) / q)
            if i >= n_a:
                i = n_a - 1
            b = a_list[i]
        tmp = colors[b]
        colors[b] = colors[b + 1]
        colors[b + 1] = tmp
        for bb in range(max(0, b - 1), min(n_bonds, b + 2)):
            want_d = colors[bb] > colors[bb + 1]
            if want_d and d_pos[bb] < 0:
                n_a = _set_remove(a_list, a_pos, n_a, bb)
                n_d = _set_add(d_list, d_pos, n_d, bb)
            elif not want_d and a_pos[bb] < 0:
                n_d = _set_remove(d_list, d_pos, n_d, bb)
                n_a = _set_add(a_list, a_pos, n_a, bb)
    return colors


@njit
def ring_evolve(colors, q, duration, key, rep, event0):
    """Colored ring dynamics for a time window; returns the next event index.

    Rings arrive at total rate R(1+q); each picks a uniform site and a
    direction (right with probability 1/(1+q)), and swaps when the mover
    has the strictly higher color.
    """
    n = colors.shape[0]
    rate = n * (1.0 + q)
    t = 0.0
    k = event0
    while True:
        u_time, u_move = _two_unifs(key, rep, k, 0)
        t += -math.log(u_time) / rate
        if t > duration:
            break
        v = u_move * rate  # in [0, n) -> right moves, [n, n(1+q)) -> left
        if v < n:
            site = int(v)
            tgt = site + 1
            if tgt == n:
                tgt = 0
        else:
            site = int((v - n) / q)
            if site >= n:
                site = n - 1
            tgt = site - 1
            if tgt < 0:
                tgt = n - 1
        if colors[site] > colors[tgt]:
            tmp = colors[site]
            colors[site] = colors[tgt]
            colors[tgt] = tmp
        k += 1
    return k


@njit(inline="always")
def _set_add(lst, pos, size, b):
    lst[size] = b
    pos[b] = size
    return size + 1


@njit(inline="always")
def _set_remove(lst, pos, size, b):
    i = pos[b]
    last = lst[size - 1]
    lst[i] = last
    pos[last] = i
    pos[b] = -1
    return size - 1


@njit
def window_step_current(half_width, q, horizon, key, rep):
    """Step-initial uncolored dynamics on a frozen-boundary window.

    Sites are -L..L with particles initially at sites <= 0.  Returns the
    occupancy at the horizon; only executable moves are drawn (the law of
    the trajectory equals the clock construction's).  Bond b supports a
    right move when its pattern is (1, 0) and a left move when it is
    (0, 1); after a swap only the bond and its two neighbors change.
    """
    n = 2 * half_width + 1
    occ = np.zeros(n, dtype=np.int8)
    occ[: half_width + 1] = 1
    n_bonds = n - 1
    r_list = np.empty(n_bonds, dtype=np.int32)
    r_pos = np.full(n_bonds, -1, dtype=np.int32)
    l_list = np.empty(n_bonds, dtype=np.int32)
    l_pos = np.full(n_bonds, -1, dtype=np.int32)
    n_r = _set_add(r_list, r_pos, 0, half_width)  # the single 10 bond
    n_l = 0
    t = 0.0
    k = 0
    while True:
        rate = n_r + q * n_l
        if rate <= 0.0:
            break
        u_time, u_move = _two_unifs(key, rep, k, 0)
        t += -math.log(u_time) / rate
        if t > horizon:
            break
        k += 1
        # one lane picks both the direction and the move within it
        u = u_move * rate
        if u < n_r:  # right move across bond b: pattern 10 -> 01
            i = int(u)
            if i >= n_r:
                i = n_r - 1
            b = r_list[i]
            occ[b] = 0
            occ[b + 1] = 1
            n_r = _set_remove(r_list, r_pos, n_r, b)
            n_l = _set_add(l_list, l_pos, n_l, b)
            if b > 0:
                if occ[b - 1] == 1:  # 11 -> 10
                    n_r = _set_add(r_list, r_pos, n_r, b - 1)
                else:  # 01 -> 00
                    n_l = _set_remove(l_list, l_pos, n_l, b - 1)
            if b + 1 < n_bonds:
                if occ[b + 2] == 0:  # 00 -> 10
                    n_r = _set_add(r_list, r_pos, n_r, b + 1)
                else:  # 01 -> 11
                    n_l = _set_remove(l_list, l_pos, n_l, b + 1)
        else:  # left move across bond b: pattern 01 -> 10
            i = int((u - n_r) / q)
            if i >= n_l:
                i = n_l - 1
            b = l_list[i]
            occ[b] = 1
            occ[b + 1] = 0
            n_l = _set_remove(l_list, l_pos, n_l, b)
            n_r = _set_add(r_list, r_pos, n_r, b)
            if b > 0:
                if occ[b - 1] == 1:  # 10 -> 11
                    n_r = _set_remove(r_list, r_pos, n_r, b - 1)
                else:  # 00 -> 01
                    n_l = _set_add(l_list, l_pos, n_l, b - 1)
            if b + 1 < n_bonds:
                if occ[b + 2] == 0:  # 10 -> 00
                    n_r = _set_remove(r_list, r_pos, n_r, b + 1)
                else:  # 11 -> 01
                    n_l = _set_add(l_list, l_pos, n_l, b + 1)
    return occ
