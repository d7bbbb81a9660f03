"""Verification suites: exact identity checkers and calibrated statistical
tests.  Each suite returns :class:`CheckResult` rows for the JSON report;
deterministic inequalities are checked on every generated sample, never on
subsamples, and every statistical verdict carries its sample size and a
standard error.
"""

from __future__ import annotations

import math
from dataclasses import dataclass
from fractions import Fraction

import numpy as np

from .. import randomness, s6v, scaling
from ..asep import graphical, kinetic
from ..lpp import (Environment, crossing_check, modified_lpp_monotone,
                   pitman_deviation, pitman_lower_bound_violation)
from ..qboson import (TransferModel, color_merge_check_exhaustive,
                      colored_release_law, greedy_release_word, bridge_law,
                      line_ensemble, normalization_constant, weight_factor,
                      yang_baxter_sides)
from .report import CheckResult
from .stats import (EmpiricalDistribution, covariance_and_se,
                    ks_from_samples, tv_distance)


def _u(master_seed: int, *coords) -> float:
    key = randomness.domain_key(master_seed, "replica")
    a, b, c = (tuple(coords) + (0, 0, 0))[:3]
    return randomness.uniform_at(key, a, b, c)


# --------------------------------------------------------------------------
# exact vertex-model identities
# --------------------------------------------------------------------------

def yang_baxter_suite(trials: int = 100, master_seed: int = 7,
                      n_colors: int = 2, max_arrows: int = 3) -> CheckResult:
    """Randomized three-vertex exchange identities; max |LHS - RHS|."""
    worst = 0.0
    tried = 0
    trial = 0
    while tried < trials:
        trial += 1
        q = _u(master_seed, trial, 0)
        x = 0.05 + 0.9 * _u(master_seed, trial, 1)
        y = x * (0.05 + 0.9 * _u(master_seed, trial, 2))  # z = y/x in (0,1)
        stack_in = tuple(int(_u(master_seed, trial, 10 + i) * 3)
                         for i in range(n_colors))
        if sum(stack_in) > max_arrows:
            continue
        a1 = int(_u(master_seed, trial, 3) * (n_colors + 1))
        i1 = int(_u(master_seed, trial, 4) * (n_colors + 1))
        b2 = int(_u(master_seed, trial, 5) * (n_colors + 1))
        j2 = int(_u(master_seed, trial, 6) * (n_colors + 1))
        inflow = list(stack_in)
        for c in (a1, i1):
            if c:
                inflow[c - 1] += 1
        for c in (b2, j2):
            if c:
                inflow[c - 1] -= 1
        if min(inflow) < 0:
            continue
        lhs, rhs, ok = yang_baxter_sides(q, x, y, a1, i1, b2, j2, stack_in,
                                         tuple(inflow))
        assert ok
        worst = max(worst, abs(lhs - rhs))
        tried += 1
    return CheckResult("yang_baxter", {"trials": trials, "seed": master_seed},
                       worst, 1e-10, worst <= 1e-10)


def partition_suite(cutoff: int = 40) -> list:
    """Truncated partition sums against the closed form, exact arithmetic."""
    results = []
    for n in (1, 2):
        for m in (1, 2):
            for q in (Fraction(0), Fraction(3, 10), Fraction(7, 10)):
                for z in (Fraction(1, 5), Fraction(1, 2)):
                    model = TransferModel(tuple(range(1, n + 1)), m, q, z)
                    z_cut = model.partition_truncated(cutoff)
                    closed = normalization_constant(q, z, n, m)
                    err = abs(float(closed - z_cut))
                    exact_ok = model.partition_exact() == closed
                    results.append(CheckResult(
                        f"partition_N{n}_M{m}_q{float(q)}_z{float(z)}",
                        {"cutoff": cutoff}, err, 1e-8,
                        err <= 1e-8 and exact_ok,
                        {"exact_equals_closed_form": exact_ok}))
    return results


def merge_weight_suite() -> list:
    """Exhaustive merge-consistency residuals for three colors."""
    taus = []
    for v1 in range(1, 4):
        for v2 in range(v1, 4):
            for v3 in range(v2, 4):
                taus.append((0, v1, v2, v3))
    results = []
    for q, u in ((0.37, 0.8), (0.0, 1.0)):
        worst = 0.0
        for tau_vals in taus:
            tau = lambda c, _t=tau_vals: _t[c]
            worst = max(worst, color_merge_check_exhaustive(q, u, 3, 3, tau))
        results.append(CheckResult(
            f"color_merge_q{q}_u{u}", {"n_colors": 3, "max_arrows": 3,
                                       "n_merge_maps": len(taus)},
            worst, 1e-12, worst <= 1e-12))
    return results


# --------------------------------------------------------------------------
# the line-ensemble / vertex-model matching
# --------------------------------------------------------------------------

def matching_suite(n_samples: int = 10**6, master_seed: int = 11,
                   q=Fraction(1, 2), z=Fraction(2, 5)) -> CheckResult:
    """TV between the exact rightmost-column law and vertex-model sampling.

    Joint law of the top-curve values (colors 1..N, rows 1..N-1) at N=M=2
    against h(k, 0; y, M) from 10^6 strip samples.
    """
    n = m = 2
    model = TransferModel((1, 2), m, q, z)
    law = {}
    for word, p in model.first_column_law().items():
        key = (sum(1 for r in range(1, n + m) if word[r] >= 1),
               sum(1 for r in range(1, n + m) if word[r] >= 2))
        law[key] = law.get(key, Fraction(0)) + p
    exact = EmpiricalDistribution.from_law(law, "transfer first-column law")
    bc = s6v.BoundaryCondition.packed_positive(n)
    heights = s6v.heights_batch(bc, float(q), float(z), m, master_seed,
                                n_samples, [(1, 1), (2, 1)])
    emp = EmpiricalDistribution.from_samples(
        [tuple(row) for row in heights.tolist()], "strip Monte Carlo")
    tv = tv_distance(exact, emp)
    return CheckResult("matching_N2M2", {"n_samples": n_samples,
                                         "q": float(q), "z": float(z)},
                       tv, 0.01, tv <= 0.01,
                       {"exact_support": len(law)})


# --------------------------------------------------------------------------
# transform identities on exact samples
# --------------------------------------------------------------------------

_PITMAN_INSTANCES = (((1, 2), 2, 300), ((1, 1, 2), 3, 350),
                     ((1, 2, 2, 2), 4, 350))


def pitman_q0_suite(master_seed: int = 13, instances=_PITMAN_INSTANCES
                    ) -> CheckResult:
    """At q=0 the top high-color curve equals its transform exactly, and
    every column releases the greedy word."""
    worst = 0.0
    greedy_fail = 0
    n_total = 0
    for sigma, m, n_samp in instances:
        model = TransferModel(sigma, m, 0.0, 0.5)
        for rep in range(n_samp):
            cfg = model.sample(master_seed, rep)
            n_curves = cfg.span + 4
            total = line_ensemble(cfg, 1, n_curves)
            high = line_ensemble(cfg, 2, n_curves)
            for k in (1, 2, 3):
                worst = max(worst, pitman_deviation(total, high, k))
            for gap in range(cfg.span):
                w = cfg.word(gap)
                v = cfg.word(gap + 1)
                x = tuple(1 if c else 0 for c in w)
                if greedy_release_word(v, x) != w:
                    greedy_fail += 1
            n_total += 1
    return CheckResult("pitman_exact_q0",
                       {"n_samples": n_total, "seed": master_seed},
                       worst, 0.0, worst == 0.0 and greedy_fail == 0,
                       {"greedy_word_failures": greedy_fail})


def pitman_bound_suite(master_seed: int = 17, qs=(0.3, 0.6, 0.9),
                       n_samples: int = 250) -> list:
    """The one-sided transform bound never fails at any q."""
    results = []
    for q in qs:
        model = TransferModel((1, 2, 2), 3, q, 0.5)
        worst = -math.inf
        dev_counts = {1: 0, 2: 0, 3: 0}
        for rep in range(n_samples):
            cfg = model.sample(master_seed, rep)
            n_curves = cfg.span + 4
            total = line_ensemble(cfg, 1, n_curves)
            high = line_ensemble(cfg, 2, n_curves)
            worst = max(worst, pitman_lower_bound_violation(total, high))
            d = pitman_deviation(total, high, 2)
            for mth in dev_counts:
                dev_counts[mth] += 1 if d >= mth else 0
        monotone = (dev_counts[1] >= dev_counts[2] >= dev_counts[3])
        results.append(CheckResult(
            f"pitman_lower_bound_q{q}", {"n_samples": n_samples},
            worst, 0.0, worst <= 0.0 and monotone,
            {"deviation_tail_counts": dev_counts}))
    return results


# --------------------------------------------------------------------------
# Gibbs invariance (exact kernels)
# --------------------------------------------------------------------------

def _pair_law(model: TransferModel):
    """Exact joint law of the last two words (outer, inner)."""
    g = model.reach_weights()
    z_tot = model.partition_exact()
    law = {}
    for i, row in enumerate(model.transitions):
        for j, w in row:
            if j == 0:
                continue
            key = (model.words[i], model.words[j])
            law[key] = law.get(key, 0) + g[i] * w / z_tot
    # the all-frozen configuration pairs the frozen word with itself
    law[(model.frozen, model.frozen)] = g[0] / z_tot
    return law


def gibbs_colored_invariance(q=Fraction(1, 2), z=Fraction(2, 5)) -> CheckResult:
    """One application of the column-recoloring kernel fixes the measure.

    The kernel redraws the innermost word's colors given the incoming word
    and the occupancy pattern, with probabilities proportional to the
    column's vertex-weight product.
    """
    model = TransferModel((1, 2), 2, q, z)
    law = _pair_law(model)
    push = {}
    for (v, w), p in law.items():
        x = tuple(1 if c else 0 for c in w)
        kernel = colored_release_law(v, x, q, z, model.n_bottom)
        for w2, k in kernel.items():
            push[(v, w2)] = push.get((v, w2), Fraction(0)) + p * k
    tv = tv_distance(EmpiricalDistribution.from_law(law),
                     EmpiricalDistribution.from_law(push))
    return CheckResult("gibbs_colored_invariance_N2M2",
                       {"q": float(q), "z": float(z)}, tv, 1e-10, tv <= 1e-10)


def gibbs_uncolored_invariance(q=Fraction(1, 2), z=Fraction(2, 5),
                               n_arrows: int = 3, m_top: int = 2,
                               interval=(0, 2)) -> CheckResult:
    """Bridge-resampling kernel fixes the uncolored measure.

    The top curve is redrawn on ``interval`` = [a, b] (a subinterval of
    [0, N-1], where the gap-factor form of the kernel is valid) from
    uniform Bernoulli bridges reweighted by the gap factor, conditionally
    on the second curve and the endpoint values.  Occupancies at rows
    a+1..b are the resampled quantity.
    """
    sigma = tuple([1] * n_arrows)
    model = TransferModel(sigma, m_top, q, z)
    law = _pair_law(model)
    n_rows = n_arrows + m_top
    a, b = interval
    if not (0 <= a < b <= n_arrows - 1):
        raise ValueError("interval must sit inside [0, N-1]")

    def curve(word, y):  # L(y) = arrows strictly above row y
        return sum(1 for r in range(y, n_rows) if word[r] >= 1)

    push = {}
    for (v, w), p in law.items():
        ends = (curve(w, a), curve(w, b))
        lower = [curve(v, y) for y in range(a, b + 1)]
        bridge = bridge_law([ends], None, lower, (a, b), q)
        for (path,), k in bridge.items():
            w2 = list(w)
            for y in range(a + 1, b + 1):  # occupancy from the resampled curve
                w2[y - 1] = 1 if path[y - a - 1] - path[y - a] == 1 else 0
            push[(v, tuple(w2))] = push.get((v, tuple(w2)), Fraction(0)) + p * k
    tv = tv_distance(EmpiricalDistribution.from_law(law),
                     EmpiricalDistribution.from_law(push))
    return CheckResult(
        f"gibbs_uncolored_invariance_N{n_arrows}_M{m_top}",
        {"q": float(q), "z": float(z), "interval": list(interval)},
        tv, 1e-10, tv <= 1e-10)


def gibbs_closed_form() -> CheckResult:
    """The two-point kernel closed form: P(higher path) = 7/15 at q=1/2, k=2."""
    q = Fraction(1, 2)
    k = 2
    lower = (-k, -k - 1, -k - 1)
    law = bridge_law([(0, -1)], None, lower, (0, 2), q)
    p_high = law.get(((0, 0, -1),), Fraction(0))
    expected = (1 - q ** (k + 1)) / (2 - q ** (k + 1))
    ok = p_high == expected == Fraction(7, 15)
    return CheckResult("gibbs_two_point_closed_form", {"q": 0.5, "k": k},
                       float(abs(p_high - expected)), 0.0, ok,
                       {"p_high": float(p_high)})


def gibbs_suite() -> list:
    checks = [gibbs_colored_invariance(),
              gibbs_colored_invariance(q=Fraction(0), z=Fraction(1, 3)),
              gibbs_uncolored_invariance(),
              gibbs_uncolored_invariance(q=Fraction(0), z=Fraction(1, 3)),
              # at N = M = 2 the gap-factor kernel's valid interval [0, 1]
              # pins both endpoints; the check is the degenerate identity
              gibbs_uncolored_invariance(n_arrows=2, m_top=2, interval=(0, 1)),
              gibbs_closed_form()]
    # worked example of the weight factor: one curve between two boundaries
    q = Fraction(1, 3)
    f = (0, 0, -1, -1, -1, -2)
    g = (-1, -2, -2, -3, -3, -3)
    gam = (0, -1, -2, -2, -3, -3)
    w = weight_factor([gam], f, g, (0, 5), q)
    expected = (1 - q**2) * (1 - q) ** 2
    checks.append(CheckResult("weight_factor_worked_example", {"q": float(q)},
                              float(abs(w - expected)), 0.0, w == expected))
    return checks


# --------------------------------------------------------------------------
# exclusion-process deterministic inequalities (clock construction)
# --------------------------------------------------------------------------

def _random_bernoulli_path(lo: int, hi: int, master_seed: int, tag: int,
                           start: int = 0) -> graphical.BernoulliPath:
    vals = [start]
    for i, _x in enumerate(range(lo, hi)):
        vals.append(vals[-1] - (1 if _u(master_seed, tag, i) < 0.5 else 0))
    return graphical.BernoulliPath(lo, tuple(vals))


def asep_inequalities_suite(n_seeds: int = 100, half_width: int = 400,
                            t: float = 50.0, q: float = 0.5,
                            master_seed: int = 23) -> list:
    """Per-replica exact checks: conservation, nested-coupling ordering,
    quadrangle, height monotonicity, triangle inequality, LPP crossing.

    The exclusion height counts colors >= -x, so its quadrangle form is
    h(x1,y1) + h(x2,y2) <= h(x1,y2) + h(x2,y1) for x1 <= x2, y1 <= y2
    (the vertex-model height, counting colors >= +x, satisfies the
    reversed inequality; the rescaled sheets of both satisfy >=).
    """
    viol = {"conservation": 0, "nested": 0, "quadrangle": 0,
            "monotonicity": 0, "triangle": 0, "crossing": 0}
    xs = (-8, -3, 0, 4, 9)
    for sd in range(n_seeds):
        seed = master_seed + 1000 * sd
        cfg0 = graphical.packed_configuration(half_width)
        cfg = graphical.evolve(cfg0, seed, t, q=q)
        if sorted(cfg.colors) != sorted(cfg0.colors):
            viol["conservation"] += 1
        h = {(x, y): graphical.colored_height(cfg, x, y)
             for x in xs for y in xs}
        x1, x2 = 5, -5
        for y in xs:
            h1 = graphical.colored_height(cfg, x1, y)
            h2 = graphical.colored_height(cfg, x2, y)
            if not (h2 <= h1 <= h2 + (x1 - x2)):
                viol["nested"] += 1
        for xa in xs:
            for xb in xs:
                if xa > xb:
                    continue
                for ya in xs:
                    for yb in xs:
                        if ya > yb:
                            continue
                        if h[(xa, ya)] + h[(xb, yb)] > \
                           h[(xa, yb)] + h[(xb, ya)]:
                            viol["quadrangle"] += 1
        # height monotonicity of two random coupled profiles
        pa = _random_bernoulli_path(-half_width, half_width, seed, 91)
        pb = _random_bernoulli_path(-half_width, half_width, seed, 92)
        shift = max(b - a_ for a_, b in zip(pa.values, pb.values))
        fa, fb = graphical.basic_couple([(pa, 0.0), (pb, 0.0)], seed, t, q=q)
        for y in range(-half_width, half_width + 1):
            if fb.at(y, t) > fa.at(y, t) + shift:
                viol["monotonicity"] += 1
                break
        # triangle inequality via restarts of step data at time s
        s_mid = t * 0.4
        zs = (-4, 0, 5)
        f_x = graphical.basic_couple(
            [(graphical.step_profile(0, -half_width, half_width), 0.0)],
            seed, t, q=q, record_times=[s_mid, t])[0]
        f_zs = graphical.basic_couple(
            [(graphical.step_profile(zv, -half_width, half_width), s_mid)
             for zv in zs], seed, t, q=q)
        for zi, zv in enumerate(zs):
            for y in xs:
                lhs = f_x.at(zv, s_mid) + f_zs[zi].at(y, t)
                if lhs < f_x.at(y, t):
                    viol["triangle"] += 1
        # crossing and modified-LPP monotonicity on a random environment
        curves = []
        for ci in range(3):
            p = _random_bernoulli_path(0, 12, seed, 70 + ci,
                                       start=4 * (3 - ci))
            curves.append(p.values)
        env = Environment.from_arrays(0, curves)
        zgrid = list(range(0, 7))
        if not crossing_check(env, zgrid, 8, 11):
            viol["crossing"] += 1
        if not modified_lpp_monotone(env, zgrid, 9):
            viol["crossing"] += 1
    total = sum(viol.values())
    return [CheckResult("asep_deterministic_inequalities",
                        {"n_seeds": n_seeds, "half_width": half_width,
                         "t": t, "q": q},
                        float(total), 0.0, total == 0, viol)]


def merge_commutation_suite(n_seeds: int = 100, master_seed: int = 29) -> list:
    """merge(evolve) == evolve(merge) pathwise for both models."""
    t = 50.0
    q = 0.5
    hw = graphical.required_half_width(t, 8)
    asep_bad = 0

    def tau_thresh(c):
        return 1 if c >= -3 else 0

    def tau_clamp(c):
        return min(max(c, -5), 5)

    for sd in range(n_seeds):
        seed = master_seed + 101 * sd
        cfg0 = graphical.packed_configuration(hw)
        evolved = graphical.evolve(cfg0, seed, t, q=q)
        for tau in (tau_thresh, tau_clamp, lambda c: 0):
            a = graphical.merge_colors(evolved, tau)
            b = graphical.evolve(graphical.merge_colors(cfg0, tau), seed, t, q=q)
            if a.colors != b.colors:
                asep_bad += 1
    s6v_bad = 0
    bc = s6v.BoundaryCondition.packed(8)
    cap = s6v.default_row_cap(bc, 8, 0.5, 0.4)
    from ..s6v.model import merge_boundary
    for sd in range(n_seeds):
        f = s6v.sample(bc, 0.5, 0.4, 8, master_seed, replica=sd, row_cap=cap)
        for tau in (s6v.threshold_merge(0), lambda c: c,
                    lambda c: s6v.NEG_INF if c == s6v.NEG_INF else 1):
            merged_field = s6v.merge_colors(f, tau)
            direct = s6v.sample(merge_boundary(bc, tau), 0.5, 0.4, 8,
                                master_seed, replica=sd, row_cap=cap)
            if not np.array_equal(merged_field.grid, direct.grid):
                s6v_bad += 1
    total = asep_bad + s6v_bad
    return [CheckResult("merge_commutation",
                        {"n_seeds": n_seeds, "asep_t": t, "s6v_N": 8},
                        float(total), 0.0, total == 0,
                        {"asep_failures": asep_bad, "s6v_failures": s6v_bad})]


# --------------------------------------------------------------------------
# statistical suites
# --------------------------------------------------------------------------

def _asep_sheet_samples(q: float, eps_inv: int, n_reps: int,
                        master_seed: int, dither: bool = False) -> np.ndarray:
    """Replicated one-point sheet values at the origin (velocity 0).

    ``dither`` adds a uniform continuity correction to the integer height
    before rescaling, turning the lattice law into its linearly
    interpolated CDF; required before comparing shapes by KS.
    """
    params = scaling.constants("asep", 0.0, q)
    eps = 1.0 / eps_inv
    t = scaling.asep_time(params, eps)
    h = kinetic.step_current_samples(q, t, n_reps, master_seed).astype(float)
    if dither:
        key = randomness.domain_key(master_seed, "replica")
        reps = np.arange(n_reps, dtype=np.int64)
        h = h + randomness.uniform_array(key, reps,
                                         np.full(n_reps, 777, np.int64),
                                         np.zeros(n_reps, np.int64))
    return np.array([scaling.asep_sheet_value(params, eps, 0.0, 0.0, hv)
                     for hv in h])


def _standardized(a: np.ndarray) -> np.ndarray:
    return (a - a.mean()) / a.std(ddof=1)


def _s6v_sheet_samples(q: float, eps_inv: int, n_reps: int, master_seed: int,
                       alpha: float = 1.0, z: float = 0.25) -> np.ndarray:
    """Replicated one-point strip sheet values at the origin."""
    params = scaling.constants("s6v", alpha, q, z)
    eps = 1.0 / eps_inv
    n_bound = int(2 * alpha * eps_inv) + 8
    n_cols = scaling.to_lattice(eps_inv)
    a, b = scaling.s6v_height_args(params, eps, 0.0, 0.0)
    bc = s6v.BoundaryCondition.packed(n_bound)
    h = s6v.heights_batch(bc, q, z, n_cols, master_seed, n_reps,
                          [(a, b)])[:, 0].astype(float)
    return np.array([scaling.s6v_sheet_value(params, eps, 0.0, 0.0, hv,
                                             n_bound) for hv in h])


def q_invariance_suite(master_seed: int = 31, n_reps: int = 10**4,
                       qs=(0.0, 0.5), eps_invs=(125, 500),
                       variant: str = "asep", alpha: float = 0.0) -> list:
    """One-point fluctuation laws across q approach each other as eps -> 0.

    Raw sheet laws carry non-universal O(eps^{1/3}) centering and scale
    corrections that differ across q (their KS decays like eps^{1/3}; the
    trend check lives there).  The universal content, the fluctuation
    shape, is compared after a uniform lattice dither and mean/scale
    standardization; that KS carries the 0.05 tolerance.
    """
    if n_reps < 10**3:
        raise ValueError("q-invariance needs at least 10^3 replicas")
    if len(qs) < 2:
        raise ValueError("q-invariance needs at least two q values")
    ks_raw = {}
    ks_shape = {}
    null_ks = None
    for eps_inv in eps_invs:
        raw = {}
        shaped = {}
        for qi, q in enumerate(qs):
            seed_q = master_seed + 7919 * qi
            if variant == "asep":
                raw[q] = _asep_sheet_samples(q, eps_inv, n_reps, seed_q)
                params = scaling.constants("asep", alpha, q)
            else:
                raw[q] = _s6v_sheet_samples(q, eps_inv, n_reps, seed_q,
                                            alpha=max(alpha, 1.0))
                params = scaling.constants("s6v", max(alpha, 1.0), q, 0.25)
            key = randomness.domain_key(seed_q, "replica")
            reps = np.arange(n_reps, dtype=np.int64)
            u = randomness.uniform_array(key, reps,
                                         np.full(n_reps, 777, np.int64),
                                         np.zeros(n_reps, np.int64))
            lattice = (1.0 / eps_inv) ** (1.0 / 3.0) / params.sigma
            shaped[q] = _standardized(raw[q] - u * lattice)
        ks_raw[eps_inv] = ks_from_samples(raw[qs[0]], raw[qs[1]])
        ks_shape[eps_inv] = ks_from_samples(shaped[qs[0]], shaped[qs[1]])
        if eps_inv == max(eps_invs):
            half = n_reps // 2
            null_ks = ks_from_samples(shaped[qs[0]][:half],
                                      shaped[qs[0]][half:])
    final = ks_shape[max(eps_invs)]
    trend_ok = ks_raw[min(eps_invs)] >= ks_raw[max(eps_invs)]
    return [CheckResult(f"q_invariance_{variant}",
                        {"qs": list(qs), "eps_invs": list(eps_invs),
                         "n_reps": n_reps},
                        final, 0.05, final <= 0.05 and trend_ok,
                        {"shape_ks_by_eps_inv": {str(k): v
                                                 for k, v in ks_shape.items()},
                         "raw_ks_by_eps_inv": {str(k): v
                                               for k, v in ks_raw.items()},
                         "null_split_half_ks": null_ks,
                         "raw_trend_nonincreasing": trend_ok})]


def stationarity_symmetry_suite(master_seed: int = 37,
                                n_samples: int = 10**5) -> list:
    """Shift stationarity and the reflection symmetry of the strip heights."""
    results = []
    # stationarity: h(x,0;y,t) vs h(x+k,0;y+k,t)+k at one tuple
    n, t, k = 10, 4, 2
    bc = s6v.BoundaryCondition.packed(n)
    a = s6v.heights_batch(bc, 0.5, 0.4, t, master_seed, n_samples,
                          [(0, 1)])[:, 0]
    b = s6v.heights_batch(bc, 0.5, 0.4, t, master_seed, n_samples,
                          [(k, 1 + k)], rep0=n_samples)[:, 0] + k
    ks1 = ks_from_samples(a, b)
    results.append(CheckResult("s6v_two_parameter_stationarity",
                               {"N": n, "t": t, "shift": k,
                                "n_samples": n_samples},
                               ks1, 0.02, ks1 <= 0.02))
    # symmetry in law: h(y,0;x,t)+y vs h(-x,0;-y,t)-x at (x,y)=(2,0)
    n2, t2, x0, y0 = 8, 4, 2, 0
    bc2 = s6v.BoundaryCondition.packed(n2)
    lhs = s6v.heights_batch(bc2, 0.5, 0.4, t2, master_seed + 1, n_samples,
                            [(y0, x0)])[:, 0] + y0
    rhs = s6v.heights_batch(bc2, 0.5, 0.4, t2, master_seed + 1, n_samples,
                            [(-x0, -y0)], rep0=n_samples)[:, 0] - x0
    ks2 = ks_from_samples(lhs, rhs)
    results.append(CheckResult("s6v_reflection_symmetry",
                               {"N": n2, "t": t2, "x": x0, "y": y0,
                                "n_samples": n_samples},
                               ks2, 0.03, ks2 <= 0.03))
    return results


def degeneration_suite(master_seed: int = 41, n_reps: int = 10**4,
                       t: float = 20.0, q: float = 0.5,
                       deltas=(0.1, 0.05, 0.02)) -> list:
    """Corner-read proxy heights converge in law to the exclusion heights."""
    direct = kinetic.step_current_samples(q, t, n_reps, master_seed)
    ks_by_delta = {}
    for di, delta in enumerate(deltas):
        params = s6v.DegenerationParams(t, delta, q)
        proxy = s6v.degeneration_proxy_samples(params, master_seed + di + 1,
                                               0, 0, n_reps)
        ks_by_delta[delta] = ks_from_samples(direct, proxy)
    ordered = [ks_by_delta[d] for d in sorted(deltas, reverse=True)]
    decreasing = all(a >= b for a, b in zip(ordered, ordered[1:]))
    final = ks_by_delta[min(deltas)]
    return [CheckResult("asep_s6v_degeneration",
                        {"t": t, "q": q, "deltas": list(deltas),
                         "n_reps": n_reps},
                        final, 0.05, final <= 0.05 and decreasing,
                        {"ks_by_delta": {str(d): v
                                         for d, v in ks_by_delta.items()},
                         "decreasing": decreasing})]


def scaling_relations_suite(n_draws: int = 100, master_seed: int = 43
                            ) -> CheckResult:
    """Diffusion and curvature identities across random fan parameters."""
    worst = 0.0
    for i in range(n_draws):
        q = 0.95 * _u(master_seed, i, 0)
        if i % 2 == 0:
            alpha = -0.9 + 1.8 * _u(master_seed, i, 1)
            params = scaling.constants("asep", alpha, q)
        else:
            z = 0.1 + 0.8 * _u(master_seed, i, 2)
            lo, hi = z, 1.0 / z
            frac = 0.05 + 0.9 * _u(master_seed, i, 3)
            alpha = lo + (hi - lo) * frac
            params = scaling.constants("s6v", alpha, q, z)
        worst = max(worst, params.curvature_residual,
                    params.diffusion_residual)
    return CheckResult("scaling_relations", {"n_draws": n_draws}, worst,
                       1e-12, worst <= 1e-12)


def finite_speed_suite(master_seed: int = 47, n_seeds: int = 50,
                       n1: int = 40, n2: int = 80, q: float = 0.5,
                       z: float = 0.5) -> list:
    """Boundary discrepancies cannot reach the certified central box."""
    b_right = randomness.b_right(q, z)
    t_box = int((1.0 - b_right) * n1 / 4.0)
    half = n1 // 2
    bad = 0
    overtakes_seen = 0
    for sd in range(n_seeds):
        colors1 = [s6v.NEG_INF] * (n2 - n1) + [
            1 if _u(master_seed, sd, r) < 0.5 else s6v.NEG_INF
            for r in range(2 * n1 + 1)]
        colors2 = [1] * (n2 - n1) + colors1[n2 - n1:]
        bc1 = s6v.BoundaryCondition(-n2, tuple(colors1))
        bc2 = s6v.BoundaryCondition(-n2, tuple(colors2))
        cap = s6v.default_row_cap(bc2, t_box, q, z)
        f1 = s6v.sample(bc1, q, z, t_box, master_seed, replica=sd,
                        row_cap=cap)
        f2 = s6v.sample(bc2, q, z, t_box, master_seed, replica=sd,
                        row_cap=cap)
        pairing = s6v.pair_trajectories(f1, f2)
        overtakes_seen += len(pairing.overtakes)
        if pairing.discrepancy_in_box((1, t_box), (-half, half)):
            bad += 1
    return [CheckResult("finite_speed_of_discrepancy",
                        {"N1": n1, "N2": n2, "T": t_box, "q": q, "z": z,
                         "n_seeds": n_seeds},
                        float(bad), 0.0, bad == 0,
                        {"overtakes_observed": overtakes_seen})]


@dataclass
class TwoPointEstimate:
    """Space-time covariance entries of the two-color stationary state.

    ``entries[(k, l, x)]`` estimates Cov(ind_k at site 0, time 0;
    ind_l at site x, time t), where ind_1 marks colors >= 1 and ind_2
    marks color 2; densities are (0.5 beta eps^{1/3}, 0.5).
    """

    beta: float
    eps_cbrt: float
    t_lag: float
    ring_size: int
    n_reps: int
    offsets: tuple
    entries: dict
    std_errors: dict

    def __post_init__(self):
        for key, val in self.entries.items():
            if abs(val) > 0.25 + 3 * self.std_errors[key] + 1e-12:
                raise AssertionError(
                    f"covariance of indicators out of range at {key}: {val}")


def two_point_estimate(beta: float, eps_cbrt: float, ring_size: int,
                       t_lag: float, n_reps: int, master_seed: int,
                       offsets=(0,), q: float = 0.4,
                       burn_in: float | None = None) -> TwoPointEstimate:
    """Monte Carlo estimate of all four covariance entries on a ring.

    Each replica burns in from the blocked state, records the time-0
    indicators at site 0, evolves a further ``t_lag``, and records the
    indicators at the requested offsets.
    """
    from .. import _kernels

    key = randomness.domain_key(master_seed, "replica")
    c2 = ring_size // 2
    c1 = int(round(0.5 * beta * eps_cbrt * ring_size))
    if burn_in is None:
        burn_in = 20.0 * ring_size
    base = graphical.ring_configuration({2: c2, 1: c1}, ring_size)
    at0 = np.empty((n_reps, 2), dtype=np.int8)
    at_t = np.empty((n_reps, 2, len(offsets)), dtype=np.int8)
    for rep in range(n_reps):
        colors = np.asarray(base.colors, dtype=np.int64).copy()
        k = _kernels.ring_evolve(colors, q, burn_in, key, rep, 0)
        at0[rep, 0] = 1 if colors[0] >= 1 else 0
        at0[rep, 1] = 1 if colors[0] == 2 else 0
        _kernels.ring_evolve(colors, q, t_lag, key, rep, k)
        for xi, x in enumerate(offsets):
            at_t[rep, 0, xi] = 1 if colors[x % ring_size] >= 1 else 0
            at_t[rep, 1, xi] = 1 if colors[x % ring_size] == 2 else 0
    entries = {}
    errors = {}
    for kk in (1, 2):
        for ll in (1, 2):
            for xi, x in enumerate(offsets):
                cov, se = covariance_and_se(at0[:, kk - 1],
                                            at_t[:, ll - 1, xi])
                entries[(kk, ll, x)] = cov
                errors[(kk, ll, x)] = se
    return TwoPointEstimate(beta, eps_cbrt, t_lag, ring_size, n_reps,
                            tuple(offsets), entries, errors)


def twopoint_suite(master_seed: int = 53, ring_size: int = 256,
                   n_reps_static: int = 10**5, n_reps_dynamic: int = 4000,
                   betas=(1.0, 2.0, 4.0), eps_cbrt: float = 1.0 / 8.0,
                   t_lag: float = 32.0, q: float = 0.4) -> list:
    """Stationary two-point function sanity and the cross-color decay."""
    results = []
    # static color-2 checks from the exact single-color stationary law
    key = randomness.domain_key(master_seed, "replica")
    half = ring_size // 2
    reps = np.arange(n_reps_static, dtype=np.int64)
    occ0 = np.empty(n_reps_static, dtype=np.int8)
    occ5 = np.empty(n_reps_static, dtype=np.int8)
    block = 4096
    for lo in range(0, n_reps_static, block):
        hi = min(lo + block, n_reps_static)
        m = hi - lo
        u = randomness.uniform_array(
            key, np.repeat(reps[lo:hi], ring_size),
            np.tile(np.arange(ring_size, dtype=np.int64), m),
            np.full(m * ring_size, 5, dtype=np.int64)).reshape(m, ring_size)
        order = np.argsort(u, axis=1)
        occ = np.zeros((m, ring_size), dtype=np.int8)
        np.put_along_axis(occ, order[:, :half], 1, axis=1)
        occ0[lo:hi] = occ[:, 0]
        occ5[lo:hi] = occ[:, 5]
    var, var_se = covariance_and_se(occ0, occ0)
    cov, cov_se = covariance_and_se(occ0, occ5)
    results.append(CheckResult(
        "twopoint_static_variance", {"ring": ring_size,
                                     "n_reps": n_reps_static},
        var, 0.25, abs(var - 0.25) <= 3 * var_se,
        {"se": var_se, "target": 0.25}))
    results.append(CheckResult(
        "twopoint_static_offsite", {"ring": ring_size, "offset": 5,
                                    "n_reps": n_reps_static},
        cov, 0.0, abs(cov) <= 3 * cov_se,
        {"se": cov_se, "exchangeability_bias": -0.25 / (ring_size - 1)}))
    # cross-color covariance decays in the density split beta
    ring_small = 128
    cross = {}
    for bi, beta in enumerate(betas):
        est = two_point_estimate(beta, eps_cbrt, ring_small, t_lag,
                                 n_reps_dynamic,
                                 master_seed + 3001 * (bi + 1), (0,), q)
        cross[beta] = (est.entries[(1, 2, 0)], est.std_errors[(1, 2, 0)])
    vals = [abs(cross[b][0]) for b in betas]
    decreasing = all(a >= b - 2 * cross[bb][1]
                     for a, b, bb in zip(vals, vals[1:], list(betas)[1:]))
    results.append(CheckResult(
        "twopoint_cross_color_decay",
        {"ring": ring_small, "betas": list(betas), "t": t_lag,
         "n_reps": n_reps_dynamic},
        vals[-1], vals[0], decreasing,
        {"abs_cov_by_beta": {str(b): cross[b][0] for b in betas},
         "se_by_beta": {str(b): cross[b][1] for b in betas}}))
    return results
