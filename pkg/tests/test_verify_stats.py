"""Distance functions and the empirical-distribution plumbing."""

import numpy as np
import pytest

from kpzlab import randomness as rnd
from kpzlab.verify import EmpiricalDistribution, ks_distance, tv_distance
from kpzlab.verify.stats import (covariance_and_se, ks_from_samples,
                                 mean_and_se)


def test_identical_distributions():
    d = EmpiricalDistribution({0: 3, 1: 5})
    assert ks_distance(d, d) == 0.0
    assert tv_distance(d, d) == 0.0


def test_point_masses():
    d0 = EmpiricalDistribution({0: 1})
    d1 = EmpiricalDistribution({1: 1})
    assert ks_distance(d0, d1) == 1.0
    assert tv_distance(d0, d1) == 1.0


def test_fair_coin_samples():
    key = rnd.domain_key(5, "replica")
    n = 10**5
    idx = np.arange(n, dtype=np.int64)
    a = (rnd.uniform_array(key, idx, 0 * idx, 0 * idx) < 0.5).astype(int)
    b = (rnd.uniform_array(key, idx, 0 * idx + 1, 0 * idx) < 0.5).astype(int)
    da = EmpiricalDistribution.from_samples(a.tolist())
    db = EmpiricalDistribution.from_samples(b.tolist())
    assert ks_distance(da, db) <= 0.01


def test_ks_from_samples_matches_discrete():
    a = [0, 0, 1, 2, 2, 2]
    b = [0, 1, 1, 2]
    da = EmpiricalDistribution.from_samples(a)
    db = EmpiricalDistribution.from_samples(b)
    assert ks_from_samples(a, b) == pytest.approx(ks_distance(da, db))


def test_empty_and_invalid_inputs():
    with pytest.raises(ValueError):
        EmpiricalDistribution({})
    with pytest.raises(ValueError):
        EmpiricalDistribution({0: -1, 1: 2})
    with pytest.raises(ValueError):
        ks_from_samples([], [1.0])


def test_tv_on_tuples():
    da = EmpiricalDistribution({(0, 1): 1, (1, 1): 1})
    db = EmpiricalDistribution({(0, 1): 1, (1, 2): 1})
    assert tv_distance(da, db) == 0.5


def test_moment_helpers():
    mean, se = mean_and_se([1.0, 2.0, 3.0, 4.0])
    assert mean == 2.5 and se == pytest.approx(np.std([1, 2, 3, 4], ddof=1) / 2)
    cov, _se = covariance_and_se([1, 2, 3, 4], [2, 4, 6, 8])
    assert cov == pytest.approx(np.cov([1, 2, 3, 4], [2, 4, 6, 8])[0, 1])


def test_provenance_and_normalization():
    d = EmpiricalDistribution({0: 2, 1: 2}, 4, provenance="unit test")
    assert d.probabilities() == {0: 0.5, 1: 0.5}
    assert d.provenance == "unit test"


def test_two_point_estimate_entries():
    from kpzlab.verify import two_point_estimate

    est = two_point_estimate(2.0, 1.0 / 8.0, 64, 4.0, 300, 123,
                             offsets=(0, 3), burn_in=150.0)
    assert set(est.entries) == {(k, l, x) for k in (1, 2) for l in (1, 2)
                                for x in (0, 3)}
    for key, val in est.entries.items():
        assert abs(val) <= 0.25 + 3 * est.std_errors[key] + 1e-12
