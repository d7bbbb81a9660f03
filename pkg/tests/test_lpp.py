"""Last passage values, the running-max transform, and their identities."""

import numpy as np
import pytest

from kpzlab.lpp import (Environment, crossing_check, lpp_from_zero, lpp_value,
                        lpp_value_bruteforce, modified_lpp_monotone, pitman,
                        pitman_iter)


def _random_env(rng, n_curves, length, lo=0):
    steps = rng.integers(-2, 3, size=(n_curves, length))
    return Environment.from_arrays(lo, steps.cumsum(axis=1))


def test_single_curve_value():
    env = Environment.from_arrays(0, [[1, 3, 2, 7]])
    assert lpp_value(env, 0, 1, 3, 1) == 6.0  # f(v) - f(u)


def test_two_curve_hand_example():
    env = Environment.from_arrays(0, [[5, 5, 4], [0, -1, -1]])
    val = lpp_value(env, 0, 2, 2, 1)
    assert val == lpp_value_bruteforce(env, 0, 2, 2, 1) == -1.0


def test_dp_equals_bruteforce_random():
    rng = np.random.default_rng(2)
    for _ in range(40):
        n = int(rng.integers(2, 4))
        m = int(rng.integers(4, 9))
        env = _random_env(rng, n, m)
        v = m - 1
        assert lpp_value(env, 0, n, v, 1) == pytest.approx(
            lpp_value_bruteforce(env, 0, n, v, 1))


def test_composition_identity():
    rng = np.random.default_rng(3)
    for _ in range(50):
        env = _random_env(rng, 3, 9)
        u, v = 0, 8
        best = max(
            lpp_value(env, u, 3, z, 2) + lpp_value(env, z, 2, v, 1)
            for z in range(u + 1, v))
        # split point collapsed onto an endpoint: one segment is empty
        best = max(best, lpp_value(env, u, 2, v, 1),
                   lpp_value(env, u, 3, v, 2))
        assert lpp_value(env, u, 3, v, 1) == pytest.approx(best)


def test_pitman_examples():
    assert list(pitman([3, 3, 2, 1], [0, -1, -1, -2])) == [0, 0, -1, -2]
    f = np.array([5, 4, 4, 3.0])
    assert np.array_equal(pitman(f, f), f)
    g = [2, 1, 1, 0]
    assert pitman([9, 9, 8, 8], g)[0] == g[0]


def test_pitman_iter_equals_variational_form():
    rng = np.random.default_rng(4)
    for _ in range(30):
        env = _random_env(rng, 3, 11)
        g = rng.integers(-4, 2, size=11).astype(float)
        g = np.minimum.accumulate(g)  # any path works; keep it monotone-ish
        lhs = pitman_iter([env.curve(1), env.curve(2), env.curve(3)], g)
        # variational form: max over z <= y of g(z) + value from (z,3) to (y,1)
        for y in range(11):
            best = g[y]
            for z in range(y):
                best = max(best, g[z] + lpp_value(env, z, 3, y, 1))
            assert lhs[y] == pytest.approx(best)
        assert np.allclose(lhs, lpp_from_zero(env, g))


def test_perturbation_inequality():
    rng = np.random.default_rng(5)
    env = _random_env(rng, 3, 10)
    g = rng.integers(-3, 3, size=10).astype(float)
    for eps in (0.25, 1.0):
        h = rng.uniform(-eps, eps, size=10)
        a = pitman_iter([env.curve(i) for i in (1, 2, 3)], g)
        b = pitman_iter([env.curve(i) for i in (1, 2, 3)], g + h)
        assert np.max(np.abs(a - b)) <= 2 * eps + 1e-12


def test_crossing_and_modified_monotonicity():
    rng = np.random.default_rng(6)
    for _ in range(100):
        env = _random_env(rng, 3, 14)
        zgrid = list(range(0, 8))
        assert crossing_check(env, zgrid, 9, 12)
        assert modified_lpp_monotone(env, zgrid, 10)
    env = Environment.from_arrays(0, [[2.0] * 8, [1.0] * 8, [0.0] * 8])
    assert crossing_check(env, range(0, 4), 5, 7)  # constant curves


def test_environment_validation():
    env = Environment.from_arrays(0, [[1, 2, 3], [0, 1, 2]])
    with pytest.raises(IndexError):
        lpp_value(env, 0, 3, 2, 1)
    with pytest.raises(ValueError):
        lpp_value(env, 2, 2, 1, 1)
    with pytest.raises(IndexError):
        env.curve(3)
