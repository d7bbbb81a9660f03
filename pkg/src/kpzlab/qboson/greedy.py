"""Release-word combinatorics for a single two-color column.

A column sees an incoming color word ``v`` (entries 0, 1, 2 from bottom to
top) and an outgoing occupancy pattern ``x`` (0/1 per row).  The valid
outgoing color words are the assignments compatible with colored arrow
conservation; among them ``greedy_release_word`` emits a 2 whenever one is
available, which is the unique assignment surviving at q = 0.  The Pitman
error of a valid word measures how far its 2-count profile sits above the
greedy one.
"""

from __future__ import annotations

from .weights import vertex_weight


def height_above(word, color: int, y: int) -> int:
    """#{rows strictly above y with the given color}; rows are 1-based."""
    return sum(1 for c in word[y:] if c == color)


def compatible(v, x) -> bool:
    """Can ``x`` be the outgoing occupancy of a column fed by ``v``?"""
    n = len(v)
    if len(x) != n:
        raise ValueError("length mismatch")
    if any(c not in (0, 1, 2) for c in v) or any(b not in (0, 1) for b in x):
        raise ValueError("v entries must be 0/1/2 and x entries 0/1")
    seen = 0
    out = 0
    for y in range(n):
        seen += 1 if v[y] != 0 else 0
        out += x[y]
        if out > seen:
            return False
    return out == seen


def vertical_counts(v, w, y: int):
    """Arrows of each color on the vertical edge above row y (1-based)."""
    c1 = sum(1 for c in v[:y] if c == 1) - sum(1 for c in w[:y] if c == 1)
    c2 = sum(1 for c in v[:y] if c == 2) - sum(1 for c in w[:y] if c == 2)
    return (c1, c2)


def valid_release_words(v, x):
    """All color words ``w`` realizing occupancy ``x`` from input ``v``."""
    if not compatible(v, x):
        raise ValueError("incompatible (v, x) pair")
    n = len(v)
    results = []
    frames = [((0, 0), ())]  # (stack counts per color, partial word)
    for y in range(n):
        nxt = []
        for (s1, s2), w in frames:
            s1 += 1 if v[y] == 1 else 0
            s2 += 1 if v[y] == 2 else 0
            if x[y] == 0:
                nxt.append(((s1, s2), w + (0,)))
            else:
                if s1 >= 1:
                    nxt.append(((s1 - 1, s2), w + (1,)))
                if s2 >= 1:
                    nxt.append(((s1, s2 - 1), w + (2,)))
        frames = nxt
    for (s1, s2), w in frames:
        if s1 == 0 and s2 == 0:
            results.append(w)
    return results


def greedy_release_word(v, x):
    """The unique q=0 assignment: release a 2 as soon as one is available."""
    if not compatible(v, x):
        raise ValueError("incompatible (v, x) pair")
    s1 = s2 = 0
    out = []
    for vy, xy in zip(v, x):
        s1 += 1 if vy == 1 else 0
        s2 += 1 if vy == 2 else 0
        if xy == 0:
            out.append(0)
        elif s2 >= 1:
            s2 -= 1
            out.append(2)
        else:
            s1 -= 1
            out.append(1)
    return tuple(out)


def pitman_error(w, w_star) -> int:
    """max_y (Ht_2(w, y) - Ht_2(w*, y)); zero iff the 2-profiles agree."""
    if len(w) != len(w_star):
        raise ValueError("length mismatch")
    n = len(w)
    best = 0
    h_w = h_s = 0
    for y in range(n - 1, -1, -1):
        h_w += 1 if w[y] == 2 else 0
        h_s += 1 if w_star[y] == 2 else 0
        if h_w - h_s > best:
            best = h_w - h_s
    return best


def column_weight(v, w, q, z, n_bottom: int):
    """Product of vertex weights down a column releasing ``w`` from ``v``.

    Rows 1..n_bottom carry spectral parameter 1, the rows above carry z.
    """
    n = len(v)
    one = (1 + 0 * q) * (1 + 0 * z)
    wgt = one
    stack = (0, 0)
    for y in range(1, n + 1):
        u = one if y <= n_bottom else z * one
        nstack = vertical_counts(v, w, y)
        if min(nstack) < 0:
            return 0 * one
        wgt = wgt * vertex_weight(u, q, stack, v[y - 1], nstack, w[y - 1])
        stack = nstack
        if wgt == 0:
            break
    return wgt
