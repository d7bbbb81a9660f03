"""Color-indexed line ensembles read off q-Boson configurations.

Curve ``i`` of the color-``k`` ensemble counts, in the ``i``-th column from
the right, the horizontal exits of color at least ``k`` strictly above a
given row.  Curves are ordered in the color index and in the curve index,
and step down by 0 or 1 per row.
"""

from __future__ import annotations

from dataclasses import dataclass

from .transfer import QBosonConfig


def frozen_word(sigma, n_top: int):
    return tuple(sigma) + (0,) * n_top


@dataclass(frozen=True)
class LineEnsemble:
    """Curves ``curves[i-1][y]`` for i = 1..n_curves, y = 0..n_rows."""

    color: int
    curves: tuple  # tuple of tuples, each of length n_rows + 1

    @property
    def n_rows(self) -> int:
        return len(self.curves[0]) - 1

    def value(self, i: int, y: int) -> int:
        if not (1 <= i <= len(self.curves)):
            raise IndexError("curve index out of range")
        return self.curves[i - 1][y]

    def check_properties(self, lower: "LineEnsemble | None" = None) -> None:
        """Assert the ordering and increment properties (exact)."""
        for i, cur in enumerate(self.curves):
            for y in range(self.n_rows):
                if cur[y + 1] - cur[y] not in (0, -1):
                    raise AssertionError("curve increment outside {0,-1}")
            if i + 1 < len(self.curves):
                nxt = self.curves[i + 1]
                if any(a < b for a, b in zip(cur, nxt)):
                    raise AssertionError("curves out of order in the column index")
        if lower is not None:
            for cur, low in zip(self.curves, lower.curves):
                if any(a < b for a, b in zip(cur, low)):
                    raise AssertionError("curves out of order in the color index")


def _counts_above(word, color: int):
    """Partial counts: entry y is #{rows > y with word color >= color}."""
    n = len(word)
    out = [0] * (n + 1)
    for y in range(n - 1, -1, -1):
        out[y] = out[y + 1] + (1 if word[y] >= color else 0)
    return tuple(out)


def line_ensemble(config: QBosonConfig, color: int, n_curves: int | None = None
                  ) -> LineEnsemble:
    """Build the color-``color`` ensemble from a configuration.

    Beyond the active span the columns are frozen, so a couple of frozen
    curves are appended after the active ones by default.
    """
    if color < 1:
        raise ValueError("color must be at least 1")
    if n_curves is None:
        n_curves = config.span + 2
    curves = tuple(_counts_above(config.exit_word(i), color)
                   for i in range(1, n_curves + 1))
    return LineEnsemble(color, curves)
