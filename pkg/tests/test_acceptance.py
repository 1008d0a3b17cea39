"""Acceptance criteria 1-10, one pass/fail line each.

Run under pytest, or directly with ``python tests/test_acceptance.py``.
"""

import json
import time

import pytest

from weingarten.verify import CHECKS


def run_check(check):
    start = time.perf_counter()
    result = check()
    elapsed = time.perf_counter() - start
    in_budget = elapsed <= result.budget_seconds
    status = "PASS" if result.passed and in_budget else "FAIL"
    line = f"[{status}] criterion {result.number:2d} {result.name} ({elapsed:.1f}s of {result.budget_seconds}s)"
    return result, in_budget, line


@pytest.mark.parametrize("check", CHECKS, ids=[c.__name__ for c in CHECKS])
def test_criterion(check, capsys):
    result, in_budget, line = run_check(check)
    with capsys.disabled():
        print("\n" + line)
        for flag in result.flags:
            print(f"       note: {flag}")
    assert result.passed, json.dumps({"computed": result.computed, "expected": result.expected}, indent=1)
    assert in_budget, line


def test_criteria_are_numbered_one_to_ten():
    assert [c().number for c in CHECKS if c.__name__ in ("closed_forms", "wick_templates")] == [1, 10]
    assert len(CHECKS) == 10


if __name__ == "__main__":
    failed = 0
    for check in CHECKS:
        result, in_budget, line = run_check(check)
        print(line, flush=True)
        failed += not (result.passed and in_budget)
    raise SystemExit(1 if failed else 0)
