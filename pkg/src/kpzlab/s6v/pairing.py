"""Arrow-trajectory pairing for two fields sampled under shared coins.

Labels ride the arrows: at a vertex where both systems carry two arrows
(or one carries two and the other none), the labels bounce (the horizontal
input's label leaves vertically and vice versa).  Where one system has a
single arrow and the other two, the single arrow's move dictates whether
the two-arrow system passes or bounces its labels.  These rules make
trajectories that ever share an edge agree forever ("couple"), and let
uncoupled arrows cross only through an overtake, the joint vertex pattern
(lone horizontal passing) x (lone vertical passing).
"""

from __future__ import annotations

from dataclasses import dataclass, field

import numpy as np

from .model import NEG_INF, ArrowField


@dataclass
class TrajectoryPairing:
    n_arrows: tuple
    coupled_pairs: dict = field(default_factory=dict)  # label2 -> (label1, col)
    overtakes: list = field(default_factory=list)  # (column, row)
    discrepancies: list = field(default_factory=list)  # (column, row)

    @property
    def n_uncoupled(self) -> tuple:
        n1, n2 = self.n_arrows
        return (n1 - len(self.coupled_pairs), n2 - len(self.coupled_pairs))

    def discrepancy_in_box(self, col_range, row_range) -> bool:
        c0, c1 = col_range
        r0, r1 = row_range
        return any(c0 <= c <= c1 and r0 <= r <= r1
                   for c, r in self.discrepancies)


def _occupied(c: int) -> bool:
    return c != NEG_INF


class _System:
    """Replays one field's moves and carries the trajectory labels."""

    def __init__(self, fld: ArrowField):
        self.fld = fld
        self.low = fld.low_row
        word = fld.boundary_word()
        self.in_word = word.astype(np.int64)
        self.labels = np.full(word.shape[0], -1, dtype=np.int64)
        n = 0
        for r in range(word.shape[0]):
            if _occupied(int(word[r])):
                self.labels[r] = n
                n += 1
        self.n_arrows = n

    def column_moves(self, c: int):
        """Per-row (in_h, in_v, out_h, out_v) colors for column index c."""
        out_word = self.fld.grid[c].astype(np.int64)
        moves = []
        in_v = NEG_INF
        for r in range(out_word.shape[0]):
            ih = int(self.in_word[r])
            oh = int(out_word[r])
            if oh == ih:
                ov = in_v
            elif oh == in_v:
                ov = ih
            else:
                raise AssertionError("exit grid violates arrow conservation")
            moves.append((ih, in_v, oh, ov))
            in_v = ov
        if _occupied(in_v):
            raise AssertionError("arrow left through the row cap")
        self.in_word = out_word
        return moves


def pair_trajectories(field1: ArrowField, field2: ArrowField
                      ) -> TrajectoryPairing:
    """Label both fields' arrows and report couplings, overtakes, and
    discrepancies.  The fields must share their coin stream."""
    if (field1.master_seed, field1.replica) != (field2.master_seed,
                                                field2.replica):
        raise ValueError("fields were not sampled under shared coins")
    if field1.low_row != field2.low_row or field1.n_cols != field2.n_cols:
        raise ValueError("fields must share their sampled window")
    s1, s2 = _System(field1), _System(field2)
    pairing = TrajectoryPairing((s1.n_arrows, s2.n_arrows))
    lab1 = s1.labels.copy()
    lab2 = s2.labels.copy()
    carry_lab1 = carry_lab2 = -1
    n_rows = field1.grid.shape[1]
    for c in range(field1.n_cols):
        moves1 = s1.column_moves(c)
        moves2 = s2.column_moves(c)
        carry_lab1 = carry_lab2 = -1
        for r in range(n_rows):
            ih1, iv1, oh1, ov1 = moves1[r]
            ih2, iv2, oh2, ov2 = moves2[r]
            lh1, lv1 = int(lab1[r]), carry_lab1
            lh2, lv2 = int(lab2[r]), carry_lab2
            nh1, nv1 = _route_labels(ih1, iv1, oh1, lh1, lv1,
                                     _n_arrows(ih2, iv2), _passes(moves2[r]))
            nh2, nv2 = _route_labels(ih2, iv2, oh2, lh2, lv2,
                                     _n_arrows(ih1, iv1), _passes(moves1[r]))
            lab1[r], carry_lab1 = nh1, nv1
            lab2[r], carry_lab2 = nh2, nv2
            # coupling: shared horizontal or vertical edge out of the vertex
            col = c + 1
            if _occupied(oh1) and _occupied(oh2):
                pairing.coupled_pairs.setdefault(int(lab2[r]),
                                                 (int(lab1[r]), col))
            if _occupied(ov1) and _occupied(ov2):
                pairing.coupled_pairs.setdefault(int(carry_lab2),
                                                 (int(carry_lab1), col))
            if oh1 != oh2:
                pairing.discrepancies.append((col, field1.low_row + r))
            if (iv1, ih1, ov1, oh1) == (NEG_INF, 1, NEG_INF, 1) and \
               (iv2, ih2, ov2, oh2) == (1, NEG_INF, 1, NEG_INF):
                pairing.overtakes.append((col, field1.low_row + r))
    return pairing


def _n_arrows(ih: int, iv: int) -> int:
    return int(_occupied(ih)) + int(_occupied(iv))


def _passes(move) -> bool:
    """Did this vertex's traffic go straight through (no deflection)?"""
    ih, iv, oh, ov = move
    return oh == ih and ov == iv


def _route_labels(ih: int, iv: int, oh: int, lh: int, lv: int,
                  other_count: int, other_passes: bool):
    """New (horizontal label, vertical label) leaving a vertex."""
    mine = _n_arrows(ih, iv)
    if mine == 0:
        return -1, -1
    if mine == 1:
        # the single arrow follows its move
        if _occupied(ih):
            return (lh, -1) if _occupied(oh) else (-1, lh)
        return (lv, -1) if _occupied(oh) else (-1, lv)
    # two arrows here: bounce unless a lone arrow opposite forces alignment
    if other_count == 1 and other_passes:
        return lh, lv
    return lv, lh


def count_uncoupled_above(pairing: TrajectoryPairing, column: int) -> int:
    """Arrows of system 2 still uncoupled after the given column."""
    coupled_by = sum(1 for _, (_l, c) in pairing.coupled_pairs.items()
                     if c <= column)
    return pairing.n_arrows[1] - coupled_by
