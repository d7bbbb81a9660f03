"""Statistical verification harness: distances, suites, and reports."""

from .stats import (  # noqa: F401
    EmpiricalDistribution,
    ks_distance,
    ks_from_samples,
    tv_distance,
)
from .report import CheckResult, write_report  # noqa: F401
from .suites import (  # noqa: F401
    TwoPointEstimate,
    matching_suite as matching_test,
    q_invariance_suite as q_invariance_test,
    two_point_estimate,
    twopoint_suite as twopoint,
)


def gibbs_invariance(kind: str, **instance):
    """Exact one-step invariance of the requested resampling kernel."""
    from . import suites

    if kind == "colored":
        return suites.gibbs_colored_invariance(**instance)
    if kind == "uncolored":
        return suites.gibbs_uncolored_invariance(**instance)
    raise ValueError("kind must be 'colored' or 'uncolored'")


def decoupling_diagnostics(field1, field2, box_cols=None, box_rows=None):
    """Pairing-based report for two fields under shared coins."""
    from .. import s6v

    pairing = s6v.pair_trajectories(field1, field2)
    report = {
        "n_arrows": pairing.n_arrows,
        "n_uncoupled": pairing.n_uncoupled,
        "n_overtakes": len(pairing.overtakes),
        "n_discrepancies": len(pairing.discrepancies),
    }
    if box_cols is not None and box_rows is not None:
        report["discrepancy_in_box"] = pairing.discrepancy_in_box(box_cols,
                                                                  box_rows)
    return report
