"""Acceptance criteria 1-10, each at its stated tolerance.

Every test prints one PASS/FAIL line; the lines are repeated in the
terminal summary.  Criterion 10 sums the wall time of 1-9.
"""

import pytest

from heckemod.acceptance import CRITERIA, TIME_BUDGET, CriterionResult, run_criterion

_results = {}


def _get(n):
    if n not in _results:
        _results[n] = run_criterion(n)
    return _results[n]


@pytest.mark.parametrize("number", [n for n, _, _ in CRITERIA], ids=[f"criterion_{n}" for n, _, _ in CRITERIA])
def test_criterion(number, record_acceptance):
    res = _get(number)
    print(res.line())
    record_acceptance(res.line())
    assert res.passed, res.detail


def test_criterion_10_time_budget(record_acceptance):
    total = sum(_get(n).seconds for n, _, _ in CRITERIA)
    res = CriterionResult(10, "full suite end to end under 5 minutes", total < TIME_BUDGET, f"total {total:.1f}s", total)
    print(res.line())
    record_acceptance(res.line())
    assert res.passed, res.detail
