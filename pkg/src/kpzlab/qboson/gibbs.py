"""Gibbs resampling kernels for gap-penalized line ensembles.

The uncolored kernel replaces a block of curves on an interval by
independent Bernoulli bridges reweighted by the factor ``W``, which
penalizes a consecutive-curve gap decrementing from height ``d`` by
``(1 - q^d)`` (and kills configurations where a gap passes from 0 to -1).
The colored kernel redraws the color split of one column's release word
proportionally to the product of vertex weights.

Both kernels enumerate their full support, so draws and exact one-step
laws are available; the latter drive the measure-invariance checks.
"""

from __future__ import annotations

from itertools import combinations, product

from .. import randomness
from .greedy import column_weight, greedy_release_word, valid_release_words


def weight_factor(curves, upper, lower, interval, q):
    """The reweighting factor W for ordered Bernoulli paths on an interval.

    ``curves`` is the ordered family (highest first); ``upper``/``lower``
    are the boundary curves or None for +/- infinity.  Returns 0 whenever
    the required ordering fails anywhere on the interval.
    """
    a, b = interval
    fam = [list(c) for c in curves]
    for c in fam:
        if len(c) != b - a + 1:
            raise ValueError("curve length does not match the interval")
        if any(d not in (0, -1) for d in (c[i + 1] - c[i] for i in range(len(c) - 1))):
            raise ValueError("curves must be Bernoulli paths")
    stack = []
    if upper is not None:
        stack.append(list(upper))
    stack.extend(fam)
    if lower is not None:
        stack.append(list(lower))
    w = 1 + 0 * q
    for hi, lo in zip(stack, stack[1:]):
        gaps = [h - l for h, l in zip(hi, lo)]
        if any(g < 0 for g in gaps):
            return 0 * q
        for x in range(1, len(gaps)):
            if gaps[x] == gaps[x - 1] - 1:
                w = w * (1 - q ** gaps[x - 1])
                if w == 0:
                    return w
    return w


def bernoulli_bridges(a: int, b: int, start: int, end: int):
    """All Bernoulli paths on [a, b] from (a, start) to (b, end)."""
    n = b - a
    drops = start - end
    if not (0 <= drops <= n):
        return []
    out = []
    for pos in combinations(range(n), drops):
        vals = [start]
        cur = start
        drop_at = set(pos)
        for i in range(n):
            cur -= 1 if i in drop_at else 0
            vals.append(cur)
        out.append(tuple(vals))
    return out


def bridge_law(endpoints, upper, lower, interval, q):
    """Exact law of the reweighted independent-bridge family.

    ``endpoints`` is a list of (start, end) pairs, one per resampled curve,
    ordered top to bottom.  The base measure is uniform on each curve's
    bridge set independently; the density is W / E[W].
    """
    a, b = interval
    bridge_sets = [bernoulli_bridges(a, b, s, e) for s, e in endpoints]
    if any(not bs for bs in bridge_sets):
        raise ValueError("no admissible bridge for some endpoint pair")
    raw = {}
    for combo in product(*bridge_sets):
        w = weight_factor(combo, upper, lower, interval, q)
        if w != 0:
            raw[combo] = w
    total = sum(raw.values())
    if total == 0:
        raise ValueError("empty support: every bridge family has weight 0")
    return {combo: w / total for combo, w in raw.items()}


def bridge_gibbs_resample(endpoints, upper, lower, interval, q, master_seed: int,
                      replica: int = 0):
    """Exact draw from :func:`bridge_law`."""
    law = bridge_law(endpoints, upper, lower, interval, q)
    key = randomness.domain_key(master_seed, "replica")
    u = randomness.uniform_at(key, replica, 0, 1)
    acc = 0.0
    items = list(law.items())
    for combo, p in items:
        acc += float(p)
        if u < acc:
            return combo
    return items[-1][0]


def colored_release_law(v, x, q, z, n_bottom: int):
    """Exact conditional law of a column's release word given its totals.

    The support is the set of valid color words; each is weighted by the
    product of the column's vertex weights.  At q = 0 the law is a point
    mass at the greedy word.
    """
    words = valid_release_words(v, x)
    raw = {}
    for w in words:
        wgt = column_weight(v, w, q, z, n_bottom)
        if wgt != 0:
            raw[w] = wgt
    total = sum(raw.values())
    if total == 0:
        raise ValueError("empty support for the colored release law")
    return {w: wgt / total for w, wgt in raw.items()}


def colored_gibbs_resample(v, x, q, z, n_bottom: int, master_seed: int,
                           replica: int = 0):
    """Exact draw from :func:`colored_release_law`."""
    law = colored_release_law(v, x, q, z, n_bottom)
    key = randomness.domain_key(master_seed, "replica")
    u = randomness.uniform_at(key, replica, 0, 2)
    acc = 0.0
    items = list(law.items())
    for w, p in items:
        acc += float(p)
        if u < acc:
            return w
    return items[-1][0]


def greedy_is_q0_mode(v, x) -> bool:
    """True iff the q=0 law is the point mass at the greedy word."""
    law = colored_release_law(v, x, 0.0, 0.5, len(v))
    return set(law) == {greedy_release_word(v, x)}
