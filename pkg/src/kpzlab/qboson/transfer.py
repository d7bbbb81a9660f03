"""Exact enumeration, partition functions, and sampling for the colored
q-Boson model on the half-infinite strip.

Between consecutive columns every arrow occupies exactly one horizontal
edge, so the model is a Markov chain over "words": the vector of horizontal
arrow colors per row (0 = no arrow).  Far to the left the word is frozen at
the boundary word; activity only happens within finitely many columns of
the right edge, and each configuration is the finite word path from the
frozen word to the rightmost column (where all arrows funnel out through
the top at weight 1).

The chain's weights decay geometrically into the left tail (any activity a
further column to the left forces one more horizontal step in the top
rows, each costing a factor <= z), so the infinite-volume partition
function and the exact law of the rightmost column solve small linear
systems.  With rational parameters everything is computed in exact
rational arithmetic.
"""

from __future__ import annotations

from dataclasses import dataclass

from .. import randomness
from .weights import vertex_candidates

Word = tuple


@dataclass(frozen=True)
class QBosonConfig:
    """One configuration, encoded as its active word path.

    ``words[g]`` is the horizontal color word entering column ``-g``;
    words at distance >= ``span`` equal the frozen boundary word.
    """

    sigma: tuple
    n_top: int
    q: object
    z: object
    words: tuple  # (w_0, w_1, ..., w_{span-1}), innermost first
    weight: object = 1

    @property
    def n_bottom(self) -> int:
        return len(self.sigma)

    @property
    def n_rows(self) -> int:
        return len(self.sigma) + self.n_top

    @property
    def span(self) -> int:
        return len(self.words)

    @property
    def frozen_word(self) -> Word:
        return tuple(self.sigma) + (0,) * self.n_top

    def word(self, gap: int) -> Word:
        """Word entering column ``-gap`` (frozen beyond the active span)."""
        if gap < 0:
            raise ValueError("gap must be nonnegative")
        return self.words[gap] if gap < self.span else self.frozen_word

    def exit_word(self, column: int) -> Word:
        """Horizontal exit colors of column ``-column`` (column >= 1)."""
        if column < 1:
            raise ValueError("exit words exist for columns -1, -2, ...")
        return self.word(column - 1)


def normalization_constant(q, z, n_bottom: int, n_top: int):
    """Closed-form total weight ((1-qz)/(1-z))^{NM}."""
    return ((1 - q * z) / (1 - z)) ** (n_bottom * n_top)


def _column_transitions(word: Word, n_colors: int, n_bottom: int, q, z,
                        require_empty: bool = True):
    """All outgoing words of one column with their weights.

    Rows are processed bottom to top carrying the vertical stack; the stack
    must be empty above the top row (arrows may exit vertically only at the
    domain's top-right corner).
    """
    n_rows = len(word)
    one = (1 + 0 * q) * (1 + 0 * z)
    results = []
    # frames: (row, stack, out_word, weight)
    stack0 = (0,) * n_colors
    frames = [(0, stack0, (), one)]
    while frames:
        row, stack, out, wgt = frames.pop()
        if row == n_rows:
            if not require_empty or sum(stack) == 0:
                results.append((out, wgt))
            continue
        u = one if row < n_bottom else z * one
        c_in = word[row]
        for stack_out, c_out, w in vertex_candidates(u, q, stack, c_in):
            if w == 0:
                continue
            if require_empty and sum(stack_out) > n_rows - row - 1:
                continue  # cannot drain the stack in the remaining rows
            frames.append((row + 1, stack_out, out + (c_out,), wgt * w))
    return results


def _solve_dense(a_rows, b):
    """Gaussian elimination; exact when the entries are Fractions."""
    n = len(b)
    if n and all(isinstance(v, (int, float)) for row in a_rows for v in row):
        import numpy as np

        sol = np.linalg.solve(np.array(a_rows, dtype=float),
                              np.array(b, dtype=float))
        return [float(v) for v in sol]
    a = [list(row) + [b[i]] for i, row in enumerate(a_rows)]
    for col in range(n):
        piv = next((r for r in range(col, n) if a[r][col] != 0), None)
        if piv is None:
            raise ZeroDivisionError("singular transfer system")
        a[col], a[piv] = a[piv], a[col]
        pval = a[col][col]
        a[col] = [v / pval for v in a[col]]
        for r in range(n):
            if r != col and a[r][col] != 0:
                f = a[r][col]
                a[r] = [v - f * p for v, p in zip(a[r], a[col])]
    return [a[r][n] for r in range(n)]


class TransferModel:
    """Column transfer operator of a colored q-Boson model.

    Parameters may be floats or ``Fraction``s; all derived quantities
    follow the input arithmetic.
    """

    def __init__(self, sigma, n_top: int, q, z):
        sigma = tuple(int(c) for c in sigma)
        if not sigma or any(c < 1 for c in sigma):
            raise ValueError("sigma must assign a color >= 1 to every bottom row")
        if n_top < 1:
            raise ValueError("need at least one top row")
        if not (0 <= q < 1) or not (0 < z < 1):
            raise ValueError("require q in [0,1), z in (0,1)")
        self.sigma = sigma
        self.n_bottom = len(sigma)
        self.n_top = n_top
        self.n_colors = max(sigma)
        self.q = q
        self.z = z
        self.frozen = sigma + (0,) * n_top
        self._build()

    # -- state space -------------------------------------------------------

    def _build(self):
        index = {self.frozen: 0}
        words = [self.frozen]
        trans: list[list] = []
        pending = [self.frozen]
        while pending:
            w = pending.pop(0)
            outs = _column_transitions(w, self.n_colors, self.n_bottom,
                                       self.q, self.z)
            row = []
            for w2, wgt in outs:
                if w2 not in index:
                    index[w2] = len(words)
                    words.append(w2)
                    pending.append(w2)
                row.append((index[w2], wgt))
            trans.append(row)
        while len(trans) < len(words):
            i = len(trans)
            outs = _column_transitions(words[i], self.n_colors, self.n_bottom,
                                       self.q, self.z)
            trans.append([(index[w2], wgt) for w2, wgt in outs])
        self.words = words
        self.index = index
        self.transitions = trans
        self._zero = 0 * self.q * self.z
        self._check_frozen_loop()

    def _check_frozen_loop(self):
        loop = [w for i, w in self.transitions[0] if i == 0]
        if len(loop) != 1 or loop[0] != 1:
            raise AssertionError("frozen word must carry a unit self-loop")

    # -- partition function ------------------------------------------------

    def partition_truncated(self, cutoff: int):
        """Total weight of configurations active within ``cutoff`` columns."""
        if cutoff < 0:
            raise ValueError("cutoff must be nonnegative")
        vec = [1 + self._zero] * len(self.words)  # exit column weighs 1
        for _ in range(cutoff):
            vec = [sum((w * vec[j] for j, w in row), self._zero)
                   for row in self.transitions]
        return vec[0]

    def partition_exact(self):
        """Infinite-volume partition function via the active-state solve."""
        return self._future_weights()[0]

    def _future_weights(self):
        """x[w] = total weight of all continuations from word w to exit."""
        n = len(self.words)
        one = 1 + self._zero
        if n == 1:
            return [one]
        active = list(range(1, n))
        a = [[(one if i == j else self._zero) for j in active] for i in active]
        b = [one] * (n - 1)
        for r, i in enumerate(active):
            for j, w in self.transitions[i]:
                if j == 0:
                    raise AssertionError("active word returned to frozen word")
                a[r][j - 1] = a[r][j - 1] - w
        x_active = _solve_dense(a, b)
        x = [one] + x_active
        x[0] = one + sum((w * x[j] for j, w in self.transitions[0] if j != 0),
                         self._zero)
        return x

    def truncation_deficit(self, cutoff: int):
        """Exact total weight beyond the cutoff (the certified tail)."""
        return self.partition_exact() - self.partition_truncated(cutoff)

    # -- exact law of the rightmost column ----------------------------------

    def reach_weights(self):
        """g[w] = total weight of all pasts placing word w at the last gap."""
        n = len(self.words)
        one = 1 + self._zero
        if n == 1:
            return [one]
        active = list(range(1, n))
        a = [[(one if i == j else self._zero) for j in active] for i in active]
        b = [self._zero] * (n - 1)
        for i in range(n):
            for j, w in self.transitions[i]:
                if j == 0:
                    continue
                if i == 0:
                    b[j - 1] = b[j - 1] + w
                else:
                    a[j - 1][i - 1] = a[j - 1][i - 1] - w
        g_active = _solve_dense(a, b)
        return [one] + g_active

    def first_column_law(self):
        """Exact distribution of the word entering column 0."""
        g = self.reach_weights()
        total = sum(g[1:], g[0])
        return {self.words[i]: g[i] / total for i in range(len(self.words))}

    # -- enumeration and sampling -------------------------------------------

    def enumerate_configs(self, cutoff: int):
        """All configurations active within ``cutoff`` columns, with weights.

        The summed weight is :meth:`partition_truncated`; the exact missing
        tail is :meth:`truncation_deficit`.
        """
        one = 1 + self._zero
        configs = [(QBosonConfig(self.sigma, self.n_top, self.q, self.z,
                                 (), one), one)]
        # paths leaving the frozen word, extended column by column rightward
        frontier = [((), 0, one)]  # (path leftmost-first, state, weight)
        for _span in range(1, cutoff + 1):
            new_frontier = []
            for path, state, wgt in frontier:
                for j, w in self.transitions[state]:
                    if j == 0:
                        continue  # idling does not create a new configuration
                    new_frontier.append((path + (self.words[j],), j, wgt * w))
            frontier = new_frontier
            for path, _state, wgt in frontier:
                cfg = QBosonConfig(self.sigma, self.n_top, self.q, self.z,
                                   tuple(reversed(path)), wgt)
                configs.append((cfg, wgt))
        return configs

    def law_as_float(self):
        law = self.first_column_law()
        return {w: float(p) for w, p in law.items()}

    def _sampling_tables(self):
        if not hasattr(self, "_cached_sampling"):
            g = [float(v) for v in self.reach_weights()]
            preds: list[list] = [[] for _ in self.words]
            for i, row in enumerate(self.transitions):
                for j, w in row:
                    if j != 0:
                        preds[j].append((i, float(w)))
            self._cached_sampling = (g, preds)
        return self._cached_sampling

    def sample(self, master_seed: int, replica: int = 0) -> QBosonConfig:
        """Draw one configuration from the exact infinite-volume measure.

        The word path is built backward from the rightmost column; the
        chain a.s. hits the frozen word after finitely many steps.
        """
        key = randomness.domain_key(master_seed, "replica")
        g, preds = self._sampling_tables()
        z_total = sum(g)
        u = randomness.uniform_at(key, replica, 0, 0)
        state = _pick(range(len(self.words)), [gi / z_total for gi in g], u)
        words = []
        step = 1
        while state != 0:
            words.append(self.words[state])
            opts = preds[state]
            probs = [g[i] * w / g[state] for i, w in opts]
            u = randomness.uniform_at(key, replica, step, 0)
            state = opts[_pick(range(len(opts)), probs, u)][0]
            step += 1
            if step > 100000:
                raise RuntimeError("backward sampler failed to terminate")
        weight = self._path_weight(tuple(words))
        return QBosonConfig(self.sigma, self.n_top, self.q, self.z,
                            tuple(words), weight)

    def _path_weight(self, words: tuple):
        wgt = 1 + self._zero
        prev = 0
        for w in reversed(words):
            j = self.index[w]
            match = [wt for jj, wt in self.transitions[prev] if jj == j]
            if not match:
                raise ValueError("invalid word path")
            wgt = wgt * match[0]
            prev = j
        return wgt


def _pick(items, probs, u: float) -> int:
    acc = 0.0
    seq = list(items)
    for k, p in zip(seq, probs):
        acc += p
        if u < acc:
            return k
    return seq[-1]
