"""The acceptance gate: one test per criterion, one verdict line each.

Run with ``-m acceptance`` (or plain ``pytest``, which includes it); the
heavy statistical criteria are additionally marked slow.  Every tolerance
is pinned in :mod:`kpzlab.verify.acceptance`.
"""

import pytest

from kpzlab.verify import acceptance

FAST = (1, 2, 3, 5, 6, 7, 13)
MEDIUM = (4, 11, 14)
HEAVY = (8, 9, 10, 12, 15)


def _check(number):
    label, _fn = acceptance.CRITERIA[number]
    rows = acceptance.run_criterion(number)
    ok = all(r.passed for r in rows)
    print(f"\ncriterion {number:02d} [{'PASS' if ok else 'FAIL'}] {label}")
    for r in rows:
        print("   " + r.line())
    assert ok, f"criterion {number} failed: " + \
        "; ".join(r.line() for r in rows if not r.passed)


@pytest.mark.acceptance
@pytest.mark.parametrize("number", FAST)
def test_acceptance_fast(number):
    _check(number)


@pytest.mark.acceptance
@pytest.mark.parametrize("number", MEDIUM)
def test_acceptance_medium(number):
    _check(number)


@pytest.mark.acceptance
@pytest.mark.slow
@pytest.mark.parametrize("number", HEAVY)
def test_acceptance_heavy(number):
    _check(number)
