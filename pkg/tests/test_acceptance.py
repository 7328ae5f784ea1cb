"""Acceptance suite: one test per criterion, at the contract tolerances.

Each test prints its PASS/FAIL line (visible with ``pytest -s``) and asserts
the criterion. Criterion 7's Hausdorff part fails for d >= 4; see README.
"""
import pytest

from projrange import acceptance


@pytest.mark.parametrize("number", range(1, 12), ids=lambda n: f"criterion_{n:02d}")
def test_criterion(number):
    result = acceptance.CRITERIA[number - 1]()
    print(result.line())
    assert result.passed, result.line()
