"""Vertex weights for the colored q-Boson model and its six-vertex partner.

A q-Boson vertex carries a stack of vertically travelling arrows (counts per
color, unbounded) and at most one horizontal arrow.  Color 0 stands for "no
horizontal arrow".  The partner model's crossing vertices carry at most one
arrow per edge.  Both weight tables depend on the colors only through their
order, except for the stack-count q-factors.
"""

from __future__ import annotations

from itertools import product


def _tail_count(stack, color: int) -> int:
    """Number of stacked arrows of color strictly greater than ``color``."""
    return sum(stack[color:])  # stack[k] is the count of color k+1


def _check_stack(stack):
    if any(c < 0 for c in stack):
        raise ValueError(f"stack counts must be nonnegative, got {stack}")


def _bump(stack, color: int, delta: int):
    if color == 0:
        return tuple(stack)
    out = list(stack)
    out[color - 1] += delta
    return tuple(out)


def vertex_weight(u, q, stack_in, c_in: int, stack_out, c_out: int):
    """Weight of one q-Boson vertex with the given in/out configuration.

    ``stack_in``/``stack_out`` are per-color counts of the vertical arrows
    below/above the vertex, ``c_in``/``c_out`` the horizontal colors (0 for
    none).  Returns 0 for any configuration violating colored arrow
    conservation, and for the forbidden release of a color strictly below
    the incoming one.
    """
    _check_stack(stack_in)
    _check_stack(stack_out)
    n = len(stack_in)
    if len(stack_out) != n:
        raise ValueError("stack length mismatch")
    if not (0 <= c_in <= n and 0 <= c_out <= n):
        raise ValueError("horizontal colors must lie in [0, n_colors]")
    if _bump(stack_in, c_in, +1) != _bump(stack_out, c_out, +1):
        return 0 * u  # conservation violated
    if c_out == 0:
        return 1 + 0 * u
    if c_out == c_in:
        return u * q ** _tail_count(stack_in, c_in)
    if c_out < c_in and c_in != 0:
        return 0 * u
    # release of color c_out (> c_in, or c_in == 0) from the stack
    avail = stack_in[c_out - 1]
    return u * (1 - q**avail) * q ** _tail_count(stack_in, c_out)


def vertex_candidates(u, q, stack_in, c_in: int):
    """All ``(stack_out, c_out, weight)`` with nonzero weight."""
    n = len(stack_in)
    out = []
    joined = _bump(stack_in, c_in, +1)
    # no horizontal exit
    out.append((joined, 0, 1 + 0 * u))
    # pass-through
    if c_in != 0:
        out.append((tuple(stack_in), c_in, u * q ** _tail_count(stack_in, c_in)))
    # releases
    lo = c_in + 1 if c_in != 0 else 1
    for c in range(lo, n + 1):
        if stack_in[c - 1] >= 1:
            w = u * (1 - q ** stack_in[c - 1]) * q ** _tail_count(stack_in, c)
            out.append((_bump(joined, c, -1), c, w))
    return out


def crossing_weight(u, q, a_in: int, c_in: int, b_out: int, c_out: int):
    """Stochastic crossing-vertex weight with spectral parameter ``u``.

    ``a_in``/``b_out`` are the vertical in/out colors and ``c_in``/``c_out``
    the horizontal ones; color 0 is the absence of an arrow.  For a fixed
    incoming pair the weights over admissible outgoing pairs sum to 1.
    """
    if sorted((a_in, c_in)) != sorted((b_out, c_out)):
        return 0 * u  # conservation violated
    if a_in == c_in:
        return 1 + 0 * u
    one = 1 + 0 * u
    denom = 1 - q * u
    if (b_out, c_out) == (a_in, c_in):  # both continue straight
        if a_in > c_in:
            return q * (one - u) / denom
        return (one - u) / denom
    # the two arrows deflect
    if a_in > c_in:
        return (one - q) / denom
    return u * (one - q) / denom


def _unit(n: int, color: int):
    v = [0] * n
    if color:
        v[color - 1] = 1
    return tuple(v)


def _vec_add(a, b, sign=1):
    return tuple(x + sign * y for x, y in zip(a, b))


def yang_baxter_sides(q, x, y, a1: int, i1: int, b2: int, j2: int, stack_in, stack_out):
    """Both sides of the three-vertex exchange identity.

    One crossing vertex with spectral parameter ``y/x`` meets two stack
    vertices with parameters ``x`` and ``y``; the identity states that the
    crossing can be pulled through the vertical line without changing the
    summed weight.  Returns ``(lhs, rhs, compatible)``; incompatible
    boundaries give two zero sides and ``compatible=False``.
    """
    n = len(stack_in)
    z = y / x
    lhs = 0 * q
    rhs = 0 * q
    inflow = _vec_add(_vec_add(stack_in, _unit(n, a1)), _unit(n, i1))
    outflow = _vec_add(_vec_add(stack_out, _unit(n, b2)), _unit(n, j2))
    if inflow != outflow:
        return lhs, rhs, False

    # crossing first (at the left), then the two stack vertices
    pairs = {(a1, i1), (i1, a1)}
    for b1, j1 in pairs:
        w_cross = crossing_weight(z, q, a1, i1, b1, j1)
        mid = _vec_add(_vec_add(stack_in, _unit(n, j1)), _unit(n, j2), -1)
        if min(mid) < 0:
            continue
        w1 = vertex_weight(x, q, stack_in, j1, mid, j2)
        w2 = vertex_weight(y, q, mid, b1, stack_out, b2)
        lhs = lhs + w_cross * w1 * w2

    # stack vertices first, crossing last (at the right)
    for b1 in range(n + 1):
        mid = _vec_add(_vec_add(stack_in, _unit(n, a1)), _unit(n, b1), -1)
        if min(mid) < 0:
            continue
        w1 = vertex_weight(y, q, stack_in, a1, mid, b1)
        diff = _vec_add(_vec_add(mid, _unit(n, i1)), stack_out, -1)
        if min(diff) < 0 or sum(diff) > 1:
            continue
        j1 = 0 if sum(diff) == 0 else diff.index(1) + 1
        w2 = vertex_weight(x, q, mid, i1, stack_out, j1)
        w_cross = crossing_weight(z, q, b1, j1, b2, j2)
        rhs = rhs + w1 * w2 * w_cross
    return lhs, rhs, True


def yang_baxter_check(q, x, y, boundary) -> float:
    """Absolute residual |LHS - RHS| for one boundary tuple.

    ``boundary`` is ``(a1, i1, b2, j2, stack_in, stack_out)``.
    """
    lhs, rhs, _ = yang_baxter_sides(q, x, y, *boundary)
    return abs(lhs - rhs)


def merge_map_validate(tau, n: int):
    """Require tau: [0, n] -> [0, n] nondecreasing with tau^{-1}(0) = {0}."""
    vals = [tau(c) for c in range(n + 1)]
    if vals[0] != 0:
        raise ValueError("merge map must fix color 0")
    if any(v == 0 for v in vals[1:]):
        raise ValueError("merge map may not send a real color to 0")
    if any(b < a for a, b in zip(vals, vals[1:])):
        raise ValueError("merge map must be nondecreasing")
    if any(not (0 <= v <= n) for v in vals):
        raise ValueError("merge map must land in [0, n]")
    return vals


def merged_stack(stack, tau):
    """Push a stack forward through a merge map (counts add within fibers)."""
    n = len(stack)
    out = [0] * n
    for c in range(1, n + 1):
        out[tau(c) - 1] += stack[c - 1]
    return tuple(out)


def color_merge_residual(q, u, stack, c_in: int, merged_target, tau):
    """Residual of the merge consistency identity at one vertex.

    Summing vertex weights over all outgoing configurations that merge to
    ``merged_target = (merged_stack_out, merged_c_out)`` must reproduce the
    vertex weight of the merged model.
    """
    n = len(stack)
    merge_map_validate(tau, n)
    target_stack, lam = merged_target
    lhs = 0 * u
    for stack_out, c_out, w in vertex_candidates(u, q, stack, c_in):
        if tau(c_out) == lam and merged_stack(stack_out, tau) == tuple(target_stack):
            lhs = lhs + w
    rhs = vertex_weight(u, q, merged_stack(stack, tau), tau(c_in),
                        tuple(target_stack), lam)
    return abs(lhs - rhs)


def color_merge_check_exhaustive(q, u, n: int, max_arrows: int, tau):
    """Max residual over all stacks with at most ``max_arrows`` arrows, all
    incoming colors, and all reachable merged targets."""
    merge_map_validate(tau, n)
    worst = 0 * u
    ranges = [range(max_arrows + 1)] * n
    for stack in product(*ranges):
        if sum(stack) > max_arrows:
            continue
        for c_in in range(n + 1):
            targets = {
                (merged_stack(so, tau), tau(co))
                for so, co, _ in vertex_candidates(u, q, stack, c_in)
            }
            # also probe a few unreachable targets: both sides must be 0
            targets.add((merged_stack(stack, tau), tau(c_in) and n))
            for tgt in targets:
                r = color_merge_residual(q, u, stack, c_in, tgt, tau)
                if r > worst:
                    worst = r
    return worst
