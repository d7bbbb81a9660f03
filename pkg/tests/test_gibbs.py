"""Weight factor, bridge laws, and the exact invariance of both kernels."""

from fractions import Fraction as F

import pytest

from kpzlab.qboson import (bernoulli_bridges, colored_gibbs_resample,
                           colored_release_law, greedy_release_word,
                           bridge_law, bridge_gibbs_resample, weight_factor)
from kpzlab.verify.suites import (gibbs_closed_form,
                                  gibbs_colored_invariance,
                                  gibbs_uncolored_invariance)


def test_weight_factor_worked_example():
    q = F(1, 3)
    f = (0, 0, -1, -1, -1, -2)
    g = (-1, -2, -2, -3, -3, -3)
    gam = (0, -1, -2, -2, -3, -3)
    assert weight_factor([gam], f, g, (0, 5), q) == (1 - q**2) * (1 - q) ** 2


def test_weight_factor_q0_strictly_ordered():
    f = (3, 3, 2, 2)
    g = (-2, -3, -3, -4)
    gam = (0, 0, -1, -1)
    assert weight_factor([gam], f, g, (0, 3), 0.0) == 1.0


def test_weight_factor_zero_on_gap_closing_from_zero():
    # a gap passing from 0 to -1 is an ordering violation: weight 0
    g = (0, 0, -1)
    gam = (0, -1, -1)
    assert weight_factor([gam], None, g, (0, 2), F(1, 2)) == 0
    # a gap closing from 1 to 0 costs (1 - q); touching is allowed
    gam2 = (1, 0, -1)
    assert weight_factor([gam2], None, g, (0, 2), F(1, 2)) == F(1, 2)


def test_bridges_enumeration():
    assert len(bernoulli_bridges(0, 4, 2, 0)) == 6
    assert bernoulli_bridges(0, 2, 0, -3) == []


def test_uniform_when_unconstrained():
    law = bridge_law([(2, 0)], None, None, (0, 4), F(1, 2))
    probs = set(law.values())
    assert probs == {F(1, 6)}


def test_closed_form_7_15():
    q, k = F(1, 2), 2
    lower = (-k, -k - 1, -k - 1)
    law = bridge_law([(0, -1)], None, lower, (0, 2), q)
    assert law[((0, 0, -1),)] == F(7, 15)
    assert law[((0, -1, -1),)] == F(8, 15)
    assert gibbs_closed_form().passed


def test_resample_draws_from_support():
    lower = (-2, -3, -3)
    for rep in range(20):
        draw = bridge_gibbs_resample([(0, -1)], None, lower, (0, 2), 0.5, 7, rep)
        assert draw[0] in {(0, 0, -1), (0, -1, -1)}


def test_colored_resample_q0_deterministic():
    v = (1, 2, 0, 1, 0)
    x = (0, 1, 1, 0, 1)
    for rep in range(5):
        w = colored_gibbs_resample(v, x, 0.0, 0.5, 2, 11, rep)
        assert w == greedy_release_word(v, x)


def test_colored_law_normalized_and_supported():
    v = (1, 2, 0, 1, 0)
    x = (0, 1, 1, 0, 1)
    law = colored_release_law(v, x, F(1, 2), F(2, 5), 2)
    assert sum(law.values()) == 1
    assert all(p > 0 for p in law.values())


def test_colored_invariance_exact():
    r = gibbs_colored_invariance(F(1, 2), F(2, 5))
    assert r.passed and r.statistic == 0


def test_uncolored_invariance_exact():
    r = gibbs_uncolored_invariance(F(1, 3), F(1, 4))
    assert r.passed and r.statistic == 0


def test_uncolored_invariance_interval_validation():
    with pytest.raises(ValueError):
        gibbs_uncolored_invariance(n_arrows=3, m_top=2, interval=(0, 4))
