"""KPZ rescaling: closed-form constants, sheet and landscape transforms.

Conventions collected in one place:

* All spatial lattice arguments are produced by :func:`to_lattice`, which
  rounds toward minus infinity.
* The exclusion-process sheet lives at time ``2 * eps^{-1} / (1 - q)`` and
  subtracts the height; the vertex-model sheet lives at time
  ``floor(eps^{-1})``, adds the height, and carries the extra recentering
  ``beta * x * eps^{-2/3} - N`` that restores shift covariance.
* The curvature normalizations differ accordingly: with the doubled time
  the identity is ``beta^2 * mu'' / (4 sigma) = 1``; with unit time it is
  ``beta^2 * |mu''| / (2 sigma) = 1``.  Both are checked to 1e-12 together
  with the diffusion identity ``beta |mu'| (1 - |mu'|) / sigma^2 = 2``.
"""

from __future__ import annotations

import math
from dataclasses import dataclass, field


def to_lattice(value: float) -> int:
    """The package-wide spatial rounding: toward minus infinity."""
    return math.floor(value)


@dataclass(frozen=True)
class ScalingParams:
    variant: str  # "asep" | "s6v"
    alpha: float
    q: float
    z: float | None
    mu: float
    mu1: float  # first derivative of the limit shape
    mu2: float  # second derivative of the limit shape
    sigma: float
    beta: float
    gamma: float
    residuals: dict = field(compare=False, default_factory=dict)

    @property
    def curvature_residual(self) -> float:
        return self.residuals["curvature"]

    @property
    def diffusion_residual(self) -> float:
        return self.residuals["diffusion"]


def constants(variant: str, alpha: float, q: float, z: float | None = None
              ) -> ScalingParams:
    """All scaling constants for a velocity in the rarefaction fan."""
    if not (0.0 <= q < 1.0):
        raise ValueError("q must lie in [0, 1)")
    gamma = 1.0 - q
    if variant == "asep":
        if not (-1.0 < alpha < 1.0):
            raise ValueError("asep velocity must lie in (-1, 1)")
        mu = 0.25 * (1.0 - alpha) ** 2
        mu1 = -0.5 * (1.0 - alpha)
        mu2 = 0.5
        sigma = 0.5 * (1.0 - alpha * alpha) ** (2.0 / 3.0)
        time_doubling = 2.0
    elif variant == "s6v":
        if z is None or not (0.0 < z < 1.0):
            raise ValueError("s6v needs a spectral parameter z in (0, 1)")
        if not (z < alpha < 1.0 / z):
            raise ValueError("s6v velocity must lie in (z, 1/z)")
        ra, rz = math.sqrt(alpha), math.sqrt(z)
        mu = -((ra - rz) ** 2) / (1.0 - z)
        mu1 = -(1.0 - rz / ra) / (1.0 - z)
        mu2 = -rz / (2.0 * alpha**1.5 * (1.0 - z))
        sigma = (alpha ** (-1.0 / 6.0) * z ** (1.0 / 6.0)
                 * (1.0 - math.sqrt(z * alpha)) ** (2.0 / 3.0)
                 * (ra - rz) ** (2.0 / 3.0)) / (1.0 - z)
        time_doubling = 1.0
    else:
        raise ValueError(f"unknown variant {variant!r}")
    p = abs(mu1)
    if not (0.0 < p < 1.0):
        raise ValueError("velocity too close to the edge of the fan")
    beta = 2.0 * sigma * sigma / (p * (1.0 - p))
    residuals = {
        "diffusion": abs(beta * p * (1.0 - p) / sigma**2 - 2.0),
        "curvature": abs(beta**2 * abs(mu2) / (2.0 * time_doubling * sigma) - 1.0),
    }
    return ScalingParams(variant, alpha, q, z, mu, mu1, mu2, sigma, beta,
                         gamma, residuals)


@dataclass(frozen=True)
class SheetGrid:
    """Rescaled sheet values on a rectangular (x, y) grid."""

    x_values: tuple
    y_values: tuple
    values: tuple  # rows indexed by x, columns by y

    def at(self, ix: int, iy: int) -> float:
        return self.values[ix][iy]


def asep_time(params: ScalingParams, eps: float, duration: float = 1.0) -> float:
    return 2.0 * duration / (params.gamma * eps)


def asep_height_args(params: ScalingParams, eps: float, x: float, y: float):
    """Integer (start, end) arguments fed to the exclusion height function."""
    a = to_lattice(params.beta * x * eps ** (-2.0 / 3.0))
    b = to_lattice(2.0 * params.alpha / eps + params.beta * y * eps ** (-2.0 / 3.0))
    return a, b


def asep_sheet_value(params: ScalingParams, eps: float, x: float, y: float,
                     height: float) -> float:
    """Centered, rescaled sheet value given the height at the lattice args."""
    if params.variant != "asep":
        raise ValueError("parameters are not for the exclusion process")
    e13 = eps ** (1.0 / 3.0)
    e23 = eps ** (-2.0 / 3.0)
    center = params.mu * 2.0 / eps + params.mu1 * params.beta * (y - x) * e23
    return (center - height) * e13 / params.sigma


def s6v_height_args(params: ScalingParams, eps: float, x: float, y: float):
    a = to_lattice(params.beta * x * eps ** (-2.0 / 3.0))
    b = to_lattice(params.alpha / eps + params.beta * y * eps ** (-2.0 / 3.0))
    return a, b


def s6v_sheet_value(params: ScalingParams, eps: float, x: float, y: float,
                    height: float, n_boundary: int) -> float:
    """Vertex-model sheet value; refuses queries outside the certified box."""
    if params.variant != "s6v":
        raise ValueError("parameters are not for the vertex model")
    box = eps ** (-1.0 / 6.0)
    if abs(x) > box or abs(y) > box:
        raise ValueError("query outside the certified square |x|,|y| <= eps^{-1/6}")
    if n_boundary < 2 * params.alpha / eps:
        raise ValueError("boundary height N must be at least 2*alpha/eps")
    e13 = eps ** (1.0 / 3.0)
    e23 = eps ** (-2.0 / 3.0)
    shift = (params.beta * x * e23 - n_boundary - params.mu / eps
             - params.mu1 * params.beta * (y - x) * e23)
    return (height + shift) * e13 / params.sigma


def landscape_value(params: ScalingParams, eps: float, x: float, s: float,
                    y: float, t: float, height: float,
                    n_boundary: int | None = None) -> float:
    """Four-parameter rescaling; reduces to the sheet at (s, t) = (0, 1)."""
    if s >= t:
        raise ValueError("need s < t")
    e13 = eps ** (1.0 / 3.0)
    e23 = eps ** (-2.0 / 3.0)
    dt = t - s
    if params.variant == "asep":
        center = (params.mu * dt * 2.0 / eps
                  + params.mu1 * params.beta * (y - x) * e23)
        return (center - height) * e13 / params.sigma
    if n_boundary is None:
        raise ValueError("vertex-model landscape needs the boundary height N")
    shift = (params.beta * x * e23 - n_boundary - params.mu * dt / eps
             - params.mu1 * params.beta * (y - x) * e23)
    return (height + shift) * e13 / params.sigma


def landscape_height_args(params: ScalingParams, eps: float, x: float,
                          s: float, y: float, t: float):
    """Lattice (start, start_time, end, end_time) for the landscape query."""
    e23 = eps ** (-2.0 / 3.0)
    a = to_lattice(params.beta * x * e23)
    if params.variant == "asep":
        b = to_lattice(2.0 * params.alpha * (t - s) / eps + params.beta * y * e23)
        return a, 2.0 * s / (params.gamma * eps), b, 2.0 * t / (params.gamma * eps)
    b = to_lattice(params.alpha * (t - s) / eps + params.beta * y * e23)
    return a, to_lattice(s / eps), b, to_lattice(t / eps)


def centering(params: ScalingParams, eps: float, s: float, t: float) -> float:
    """The deterministic height centering over a time window (additive)."""
    return params.mu * (t - s) * 2.0 / eps if params.variant == "asep" \
        else params.mu * (t - s) / eps


def init_rescale(h0, eps: float, x_values) -> list:
    """Profile map ``x -> -2 eps^{1/3} (h0(2 x eps^{-2/3}) + x eps^{-2/3})``.

    ``h0`` maps integers to integers; off-lattice x are evaluated at the
    floored lattice point of ``2 x eps^{-2/3}`` (linear interpolation is the
    caller's concern when plotting).
    """
    e13 = eps ** (1.0 / 3.0)
    e23 = eps ** (-2.0 / 3.0)
    out = []
    for x in x_values:
        arg = to_lattice(2.0 * x * e23)
        out.append(-2.0 * e13 * (h0(arg) + x * e23))
    return out


def sheet_grid(params: ScalingParams, eps: float, x_values, y_values,
               height_fn, n_boundary: int | None = None) -> SheetGrid:
    """Evaluate the sheet on a grid; ``height_fn(a, b)`` supplies heights."""
    rows = []
    for x in x_values:
        row = []
        for y in y_values:
            if params.variant == "asep":
                a, b = asep_height_args(params, eps, x, y)
                row.append(asep_sheet_value(params, eps, x, y, height_fn(a, b)))
            else:
                a, b = s6v_height_args(params, eps, x, y)
                row.append(s6v_sheet_value(params, eps, x, y, height_fn(a, b),
                                           n_boundary))
        rows.append(tuple(row))
    return SheetGrid(tuple(x_values), tuple(y_values), tuple(rows))
