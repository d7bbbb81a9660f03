"""Scaling constants, their identities, and the sheet/landscape plumbing."""

import pytest

from kpzlab import scaling


def test_asep_constants_at_zero_velocity():
    p = scaling.constants("asep", 0.0, 0.0)
    assert (p.mu, p.sigma, p.beta) == (0.25, 0.5, 2.0)
    assert p.gamma == 1.0
    assert p.curvature_residual < 1e-14
    assert p.diffusion_residual < 1e-14


def test_s6v_constants_example():
    p = scaling.constants("s6v", 1.0, 0.5, 0.25)
    assert p.mu == pytest.approx(-1.0 / 3.0)
    # closed forms at (alpha, z) = (1, 1/4): sigma = 2^{1/3}/3, beta = 2^{2/3}
    assert p.sigma == pytest.approx(2.0 ** (1 / 3) / 3.0, abs=1e-12)
    assert p.sigma == pytest.approx(0.4200, abs=1e-4)
    assert p.beta == pytest.approx(2.0 ** (2 / 3), abs=1e-12)
    assert p.beta == pytest.approx(1.588, abs=1e-3)
    assert p.curvature_residual < 1e-12


def test_s6v_mu_vanishes_at_fan_edge():
    p = scaling.constants("s6v", 0.25 + 1e-9, 0.3, 0.25)
    assert abs(p.mu) < 1e-8


def test_fan_validation():
    with pytest.raises(ValueError):
        scaling.constants("asep", 1.0, 0.0)
    with pytest.raises(ValueError):
        scaling.constants("s6v", 0.1, 0.0, 0.25)
    with pytest.raises(ValueError):
        scaling.constants("s6v", 1.0, 0.0, None)


def test_relations_random_draws():
    import random

    rng = random.Random(0)
    for _ in range(100):
        q = rng.uniform(0.0, 0.95)
        alpha = rng.uniform(-0.9, 0.9)
        p = scaling.constants("asep", alpha, q)
        assert p.curvature_residual <= 1e-12
        assert p.diffusion_residual <= 1e-12
        z = rng.uniform(0.1, 0.9)
        a = z + (1.0 / z - z) * rng.uniform(0.05, 0.95)
        p = scaling.constants("s6v", a, q, z)
        assert p.curvature_residual <= 1e-12
        assert p.diffusion_residual <= 1e-12


def test_sheet_shift_linearity():
    p = scaling.constants("asep", 0.0, 0.3)
    eps = 1.0 / 100
    base = scaling.asep_sheet_value(p, eps, 0.5, -0.5, 40.0)
    shifted = scaling.asep_sheet_value(p, eps, 0.5, -0.5, 40.0 + 3.0)
    assert shifted - base == pytest.approx(-3.0 * eps ** (1 / 3) / p.sigma)


def test_asep_sheet_alpha0_matches_plain_normalization():
    # at velocity 0 the sheet reduces to eps^{1/3}(eps^{-1} + 2(x-y)eps^{-2/3} - 2h)
    p = scaling.constants("asep", 0.0, 0.0)
    eps = 1.0 / 500
    for (x, y, h) in [(0.0, 0.0, 250.0), (0.5, -0.25, 300.0)]:
        got = scaling.asep_sheet_value(p, eps, x, y, h)
        want = eps ** (1 / 3) * (1 / eps + 2 * (x - y) * eps ** (-2 / 3)
                                 - 2 * h)
        assert got == pytest.approx(want)


def test_sheet_reduces_to_packed_identity_on_lattice():
    """With the packed-time height table the centered sheet is exactly the
    discrete parabola the centering predicts (lattice-aligned arguments)."""
    p = scaling.constants("asep", 0.0, 0.5)
    eps = 1.0 / 64
    e23 = eps ** (-2 / 3)

    def packed_height(a, b):  # h(a, 0; b, 0) = (a - b) 1{b <= a}
        return (a - b) if b <= a else 0

    for ax in (-2, -1, 0, 1, 2):
        for ay in (-2, -1, 0, 1, 2):
            x = ax / (p.beta * e23)
            y = ay / (p.beta * e23)
            a, b = scaling.asep_height_args(p, eps, x, y)
            assert (a, b) == (ax, ay)
            got = scaling.asep_sheet_value(p, eps, x, y, packed_height(a, b))
            center = p.mu * 2 / eps + p.mu1 * (ay - ax)
            want = (center - packed_height(ax, ay)) * eps ** (1 / 3) / p.sigma
            assert got == pytest.approx(want, abs=1e-12)


def test_s6v_sheet_domain_refusal():
    p = scaling.constants("s6v", 1.0, 0.5, 0.25)
    eps = 1.0 / 64
    box = eps ** (-1 / 6)
    with pytest.raises(ValueError):
        scaling.s6v_sheet_value(p, eps, box * 1.01, 0.0, 10.0, 10**4)
    with pytest.raises(ValueError):
        scaling.s6v_sheet_value(p, eps, 0.0, 0.0, 10.0, 2)  # N too small


def test_landscape_reduces_to_sheet():
    p = scaling.constants("asep", 0.2, 0.4)
    eps = 1.0 / 200
    for h in (40.0, 55.0):
        sheet = scaling.asep_sheet_value(p, eps, 0.3, -0.7, h)
        land = scaling.landscape_value(p, eps, 0.3, 0.0, -0.7, 1.0, h)
        assert land == pytest.approx(sheet)
    with pytest.raises(ValueError):
        scaling.landscape_value(p, eps, 0.0, 1.0, 0.0, 1.0, 5.0)


def test_centering_additive():
    for variant, z in (("asep", None), ("s6v", 0.25)):
        p = scaling.constants(variant, 0.5 if variant == "asep" else 1.0,
                              0.3, z)
        eps = 1.0 / 100
        a = scaling.centering(p, eps, 0.0, 0.4)
        b = scaling.centering(p, eps, 0.4, 1.0)
        c = scaling.centering(p, eps, 0.0, 1.0)
        assert a + b == pytest.approx(c)


def test_init_rescale_step_profile():
    eps = 1.0 / 125

    def step(z):  # step at 0
        return -z if z <= 0 else 0

    xs = [0.0, 0.5, 1.0]
    vals = scaling.init_rescale(step, eps, xs)
    # for lattice-aligned x > 0 the map gives -2 x eps^{-1/3}: the step
    # profile sharpens into the narrow wedge as eps -> 0
    for x, v in zip(xs, vals):
        assert v == pytest.approx(-2.0 * x * eps ** (-1 / 3))

    def flat(z):  # half-density comb
        return -((z + 1) // 2)

    vals = scaling.init_rescale(flat, eps, [0.1 * k for k in range(20)])
    assert max(abs(v) for v in vals) <= 2.0 * eps ** (1 / 3) + 1e-12


def test_lattice_rounding_convention():
    assert scaling.to_lattice(2.7) == 2
    assert scaling.to_lattice(-2.3) == -3
