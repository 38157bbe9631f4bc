"""Acceptance gate: one test per shipped criterion, all exact.

Runs the same suite as `quadlie verify --suite paper` and prints one
pass/fail line per criterion.
"""

import pytest

from quadlie import golden


@pytest.fixture(scope="module")
def suite_results():
    return {res.number: res for res in golden.run_suite()}


def _report(res):
    status = "PASS" if res.passed else "FAIL"
    print(f"{status} {res.number:>2}  {res.name}" + (f"  [{res.detail}]" if res.detail else ""))
    assert res.passed, f"criterion {res.number}: {res.detail}"


@pytest.mark.parametrize("number", range(1, 15))
def test_criterion(suite_results, number):
    _report(suite_results[number])
