"""Determinism, prefix stability, and marginal laws of the random streams."""

import numpy as np
import pytest

from kpzlab import _kernels, randomness as rnd


def test_same_coordinates_same_draw():
    spec = rnd.SeedSpec(123456789, "asep_clock")
    a = rnd.clock_events(spec, 0, 10.0, q=0.5)
    b = rnd.clock_events(spec, 0, 10.0, q=0.5)
    assert a == b


def test_distinct_domains_distinct_draws():
    k1 = rnd.domain_key(5, "asep_clock")
    k2 = rnd.domain_key(5, "s6v_coin")
    assert rnd.uniform_at(k1, 1, 2, 3) != rnd.uniform_at(k2, 1, 2, 3)


def test_prefix_stability():
    spec = rnd.SeedSpec(42, "asep_clock")
    short = rnd.clock_times(spec, 3, rnd.DIR_RIGHT, 1.0, 5.0)
    long = rnd.clock_times(spec, 3, rnd.DIR_RIGHT, 1.0, 20.0)
    assert np.array_equal(short, long[: short.size])
    events_5 = rnd.clock_events(spec, 3, 5.0, q=0.3)
    events_10 = rnd.clock_events(spec, 3, 10.0, q=0.3)
    assert events_5 == [e for e in events_10 if e.time <= 5.0]


def test_clock_q0_all_right():
    spec = rnd.SeedSpec(7, "asep_clock")
    events = rnd.clock_events(spec, 0, 25.0, q=0.0)
    assert events and all(e.direction == "right" for e in events)


def test_clock_rates():
    spec = rnd.SeedSpec(11, "asep_clock")
    q = 0.4
    horizon = 2000.0
    rights = sum(len(rnd.clock_times(spec, s, rnd.DIR_RIGHT, 1.0, horizon))
                 for s in range(20))
    lefts = sum(len(rnd.clock_times(spec, s, rnd.DIR_LEFT, q, horizon))
                for s in range(20))
    n = 20 * horizon
    assert abs(rights - n) < 4 * np.sqrt(n)
    assert abs(lefts - q * n) < 4 * np.sqrt(q * n)


def test_horizon_validation():
    spec = rnd.SeedSpec(1, "asep_clock")
    with pytest.raises(ValueError):
        rnd.clock_events(spec, 0, 0.0)
    with pytest.raises(ValueError):
        rnd.clock_events(spec, 0, -3.0)


def test_vertex_coins_q0_never_up():
    spec = rnd.SeedSpec(9, "s6v_coin")
    assert all(rnd.vertex_coins(spec, 0.0, 0.5, x, y).up_coin == 0
               for x in range(1, 50) for y in range(-5, 5))


def test_coin_probabilities_closed_form():
    assert rnd.b_up(0.5, 0.5) == pytest.approx(1.0 / 3.0)
    assert rnd.b_right(0.5, 0.5) == pytest.approx(2.0 / 3.0)
    assert 0.0 <= rnd.b_up(0.3, 0.7) <= rnd.b_right(0.3, 0.7) < 1.0


def test_coin_empirical_mean():
    spec = rnd.SeedSpec(13, "s6v_coin")
    q, z = 0.5, 0.5
    n = 10**6
    key = spec.key
    u = rnd.uniform_array(key, np.zeros(n, np.int64),
                          np.arange(1, n + 1, dtype=np.int64),
                          np.full(n, 2 * 0 + rnd.COIN_RIGHT, np.int64))
    mean = float((u < rnd.b_right(q, z)).mean())
    se = np.sqrt(rnd.b_right(q, z) * (1 - rnd.b_right(q, z)) / n)
    assert abs(mean - rnd.b_right(q, z)) < 3 * se


def test_intersite_independence():
    spec = rnd.SeedSpec(17, "asep_clock")
    n = 10**5
    key = spec.key
    idx = np.arange(n, dtype=np.int64)
    a = rnd.uniform_array(key, np.full(n, 0, np.int64),
                          np.full(n, 1, np.int64), idx)
    b = rnd.uniform_array(key, np.full(n, 1, np.int64),
                          np.full(n, 1, np.int64), idx)
    corr = np.corrcoef(a, b)[0, 1]
    assert abs(corr) < 4.0 / np.sqrt(n)


def test_scalar_array_kernel_agreement():
    key = rnd.domain_key(998877, "replica")
    w0 = np.arange(-20, 20, dtype=np.int64)
    arr = rnd.uniform_array(key, w0, w0 * 3 - 1, w0 + 11)
    for i, w in enumerate(w0):
        scal = rnd.uniform_at(key, int(w), int(w) * 3 - 1, int(w) + 11)
        kern = _kernels._unif(np.uint64(key), np.int64(w),
                              np.int64(w * 3 - 1), np.int64(w + 11))
        assert scal == arr[i] == kern
        hi, lo = _kernels._two_unifs(np.uint64(key), np.int64(w),
                                     np.int64(w * 3 - 1), np.int64(w + 11))
        h = rnd.hash_coords(key, int(w), int(w) * 3 - 1, int(w) + 11)
        assert hi == ((h >> 32) + 0.5) * 2.0**-32
        assert lo == ((h & 0xFFFFFFFF) + 0.5) * 2.0**-32


def test_parse_seed():
    assert rnd.parse_seed("123") == 123
    assert rnd.parse_seed("0xff") == 255
    assert rnd.parse_seed("0xFFFFFFFFFFFFFFFF") == 2**64 - 1
    with pytest.raises(ValueError):
        rnd.parse_seed(str(2**64))


def test_unknown_domain_rejected():
    with pytest.raises(ValueError):
        rnd.SeedSpec(1, "nope")
