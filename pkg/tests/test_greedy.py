"""Release words of a two-color column: validity, greediness, error."""

from itertools import product

import pytest

from kpzlab.qboson import (colored_release_law, compatible,
                           greedy_release_word, pitman_error,
                           valid_release_words, vertical_counts)


def test_greedy_hand_example():
    assert greedy_release_word((1, 0, 2, 0), (0, 0, 1, 1)) == (0, 0, 2, 1)


def test_greedy_no_twos_in_no_twos_out():
    v = (1, 0, 1, 1, 0)
    x = (0, 1, 0, 1, 1)
    assert 2 not in greedy_release_word(v, x)


def test_pitman_error_examples():
    assert pitman_error((0, 0, 2, 1), (0, 0, 2, 1)) == 0
    assert pitman_error((0, 0, 1, 2), (0, 0, 2, 1)) == 1


def test_incompatible_rejected():
    assert not compatible((0, 0, 1), (1, 0, 0))
    with pytest.raises(ValueError):
        greedy_release_word((0, 0, 1), (1, 0, 0))
    with pytest.raises(ValueError):
        valid_release_words((0, 1), (1, 1))


def test_pitman_error_nonnegative_exhaustive():
    """Ht_2(w, y) >= Ht_2(w*, y) for every valid word, all lengths <= 6."""
    for n in range(1, 7):
        for v in product((0, 1, 2), repeat=n):
            for x in product((0, 1), repeat=n):
                try:
                    ok = compatible(v, x)
                except ValueError:
                    continue
                if not ok:
                    continue
                w_star = greedy_release_word(v, x)
                for w in valid_release_words(v, x):
                    assert pitman_error(w, w_star) >= 0
                    # pointwise domination of the 2-height
                    h_w = h_s = 0
                    for y in range(n - 1, -1, -1):
                        h_w += w[y] == 2
                        h_s += w_star[y] == 2
                        assert h_w >= h_s


def test_vertical_counts_nonnegative_on_valid():
    v = (2, 1, 0, 1, 2, 0)
    x = (0, 1, 1, 0, 1, 1)
    for w in valid_release_words(v, x):
        for y in range(len(v) + 1):
            c1, c2 = vertical_counts(v, w, y)
            assert c1 >= 0 and c2 >= 0


def test_single_support_release_is_certain():
    v, x = (1, 0), (0, 1)
    assert valid_release_words(v, x) == [(0, 1)]
    law = colored_release_law(v, x, 0.7, 0.3, 1)
    assert law == {(0, 1): 1.0}


def test_q0_law_is_point_mass_at_greedy():
    v = (2, 1, 0, 1, 2, 0)
    x = (0, 1, 1, 0, 1, 1)
    law = colored_release_law(v, x, 0.0, 0.5, 3)
    assert set(law) == {greedy_release_word(v, x)}
    assert float(sum(law.values())) == pytest.approx(1.0)
