"""Empirical distributions and the two distances used throughout.

Kolmogorov-Smirnov compares scalar laws through their CDFs; total
variation compares laws on arbitrary hashable support (used for exact
joint-law comparisons).  Every statistical verdict elsewhere reports the
sample size and a standard error next to the statistic.
"""

from __future__ import annotations

from collections import Counter
from dataclasses import dataclass

import numpy as np


@dataclass
class EmpiricalDistribution:
    """Weighted support points with provenance metadata."""

    weights: dict
    n_samples: int | None = None
    provenance: str = ""

    def __post_init__(self):
        if not self.weights:
            raise ValueError("empty distribution")
        if any(w < 0 for w in self.weights.values()):
            raise ValueError("negative weight")
        total = sum(self.weights.values())
        if total <= 0:
            raise ValueError("distribution not normalizable")

    @staticmethod
    def from_samples(samples, provenance: str = "") -> "EmpiricalDistribution":
        samples = list(samples)
        counts = Counter(samples)
        return EmpiricalDistribution({k: v for k, v in counts.items()},
                                     len(samples), provenance)

    @staticmethod
    def from_law(law: dict, provenance: str = "") -> "EmpiricalDistribution":
        return EmpiricalDistribution(dict(law), None, provenance)

    def probabilities(self) -> dict:
        total = sum(self.weights.values())
        return {k: w / total for k, w in self.weights.items()}


def tv_distance(d1: EmpiricalDistribution, d2: EmpiricalDistribution) -> float:
    """Half the L1 distance between the normalized laws."""
    p1, p2 = d1.probabilities(), d2.probabilities()
    keys = set(p1) | set(p2)
    return 0.5 * float(sum(abs(float(p1.get(k, 0)) - float(p2.get(k, 0)))
                           for k in keys))


def ks_distance(d1: EmpiricalDistribution, d2: EmpiricalDistribution) -> float:
    """Sup-norm distance between the CDFs (scalar support only)."""
    p1, p2 = d1.probabilities(), d2.probabilities()
    keys = sorted(set(p1) | set(p2))
    c1 = c2 = 0.0
    worst = 0.0
    for k in keys:
        c1 += float(p1.get(k, 0))
        c2 += float(p2.get(k, 0))
        worst = max(worst, abs(c1 - c2))
    return worst


def ks_from_samples(a, b) -> float:
    """Two-sample KS statistic for real-valued samples."""
    a = np.sort(np.asarray(a, dtype=float))
    b = np.sort(np.asarray(b, dtype=float))
    if a.size == 0 or b.size == 0:
        raise ValueError("empty sample")
    grid = np.concatenate([a, b])
    ca = np.searchsorted(a, grid, side="right") / a.size
    cb = np.searchsorted(b, grid, side="right") / b.size
    return float(np.max(np.abs(ca - cb)))


def mean_and_se(samples) -> tuple:
    arr = np.asarray(samples, dtype=float)
    if arr.size < 2:
        raise ValueError("need at least two samples")
    return float(arr.mean()), float(arr.std(ddof=1) / np.sqrt(arr.size))


def covariance_and_se(a, b) -> tuple:
    """Sample covariance of paired observations with a jackknife-free SE."""
    a = np.asarray(a, dtype=float)
    b = np.asarray(b, dtype=float)
    if a.shape != b.shape or a.size < 2:
        raise ValueError("need paired samples")
    prod = (a - a.mean()) * (b - b.mean())
    n = a.size
    cov = float(prod.sum() / (n - 1))
    se = float(prod.std(ddof=1) / np.sqrt(n))
    return cov, se
