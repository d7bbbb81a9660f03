"""Smoke and contract tests for the verification suites at small sizes."""

import pytest

from kpzlab.verify import suites


def test_q_invariance_refuses_small_samples():
    with pytest.raises(ValueError):
        suites.q_invariance_suite(n_reps=500)
    with pytest.raises(ValueError):
        suites.q_invariance_suite(qs=(0.3,), n_reps=2000)


def test_q_invariance_same_q_is_zero():
    """The same q reuses the same replica streams: KS identically 0."""
    rows = suites.q_invariance_suite(master_seed=61, n_reps=1000,
                                     qs=(0.3, 0.3), eps_invs=(16, 32))
    detail = rows[0].details
    assert all(v == 0.0 for v in detail["raw_ks_by_eps_inv"].values())
    assert rows[0].passed


@pytest.mark.slow
def test_q_invariance_s6v_variant():
    rows = suites.q_invariance_suite(master_seed=67, n_reps=2000,
                                     qs=(0.0, 0.4), eps_invs=(16, 32),
                                     variant="s6v")
    detail = rows[0].details
    assert set(detail["raw_ks_by_eps_inv"]) == {"16", "32"}
    assert 0.0 <= rows[0].statistic <= 1.0
    assert detail["null_split_half_ks"] <= 0.1


def test_matching_q0_special_case():
    from fractions import Fraction

    r = suites.matching_suite(n_samples=10**5, master_seed=71,
                              q=Fraction(0), z=Fraction(2, 5))
    assert r.passed and r.statistic <= 0.01


def test_yang_baxter_suite_structure():
    r = suites.yang_baxter_suite(trials=25, master_seed=3)
    assert r.passed and r.parameters["trials"] == 25


def test_finite_speed_small_instance():
    rows = suites.finite_speed_suite(master_seed=5, n_seeds=8, n1=16, n2=32)
    assert rows[0].passed
    assert rows[0].parameters["T"] == int((1 - 2.0 / 3.0) * 16 / 4)
