"""The acceptance gate: every exactness identity and calibrated statistical
trend this package promises, runnable as one suite.

Each criterion builds on the suite functions in :mod:`kpzlab.verify.suites`
with its parameters pinned here; ``run_criterion(k)`` returns the
:class:`CheckResult` rows and ``run_all`` prints one verdict line per
criterion.
"""

from __future__ import annotations

import time

from . import suites

MASTER_SEED = 1


def _c01():
    return [suites.yang_baxter_suite(trials=100, master_seed=MASTER_SEED)]


def _c02():
    return suites.partition_suite(cutoff=40)


def _c03():
    return suites.merge_weight_suite()


def _c04():
    return [suites.matching_suite(n_samples=10**6,
                                  master_seed=MASTER_SEED + 4)]


def _c05():
    return [suites.pitman_q0_suite(master_seed=MASTER_SEED + 5)]


def _c06():
    return suites.pitman_bound_suite(master_seed=MASTER_SEED + 6)


def _c07():
    return suites.gibbs_suite()


def _c08():
    return suites.asep_inequalities_suite(n_seeds=100, half_width=400,
                                          t=50.0, master_seed=MASTER_SEED + 8)


def _c09():
    return suites.merge_commutation_suite(n_seeds=100,
                                          master_seed=MASTER_SEED + 9)


def _c10():
    return suites.q_invariance_suite(master_seed=MASTER_SEED + 10,
                                     n_reps=10**4, qs=(0.0, 0.5),
                                     eps_invs=(125, 500))


def _c11():
    return suites.stationarity_symmetry_suite(master_seed=MASTER_SEED + 11,
                                              n_samples=10**5)


def _c12():
    return suites.degeneration_suite(master_seed=MASTER_SEED + 12,
                                     n_reps=10**4, t=20.0, q=0.5,
                                     deltas=(0.1, 0.05, 0.02))


def _c13():
    return [suites.scaling_relations_suite(n_draws=100,
                                           master_seed=MASTER_SEED + 13)]


def _c14():
    return suites.finite_speed_suite(master_seed=MASTER_SEED + 14,
                                     n_seeds=50, n1=40)


def _c15():
    return suites.twopoint_suite(master_seed=MASTER_SEED + 15)


CRITERIA = {
    1: ("three-vertex exchange identity", _c01),
    2: ("partition function closed form", _c02),
    3: ("color-merge weight identity", _c03),
    4: ("line-ensemble / vertex-model matching", _c04),
    5: ("transform exactness at q=0", _c05),
    6: ("one-sided transform bound", _c06),
    7: ("Gibbs kernel invariance", _c07),
    8: ("deterministic inequalities per replica", _c08),
    9: ("pathwise color merging", _c09),
    10: ("q-invariance of rescaled fluctuations", _c10),
    11: ("stationarity and reflection symmetry", _c11),
    12: ("exclusion degeneration of the vertex model", _c12),
    13: ("scaling-constant relations", _c13),
    14: ("finite speed of discrepancy", _c14),
    15: ("stationary two-point sanity", _c15),
}


def run_criterion(number: int) -> list:
    label, fn = CRITERIA[number]
    results = fn()
    return results if isinstance(results, list) else [results]


def run_all(numbers=None, echo=print) -> list:
    """Run criteria (all by default), printing one verdict line each."""
    all_results = []
    for k in sorted(numbers or CRITERIA):
        label, _fn = CRITERIA[k]
        t0 = time.time()
        rows = run_criterion(k)
        ok = all(r.passed for r in rows)
        dt = time.time() - t0
        echo(f"criterion {k:02d} [{'PASS' if ok else 'FAIL'}] "
             f"{label} ({dt:.1f}s)")
        for r in rows:
            if not r.passed:
                echo("    " + r.line())
        all_results.extend(rows)
    return all_results
