"""One test per acceptance criterion, each backed by the golden suite.

A PASS/FAIL line per criterion is printed at the end of the session (see
conftest.py) and also to stdout when running with ``-s``.
"""
import pytest

from seshconf.golden import CRITERIA, criterion_status, run_golden

TIME_LIMIT = 60.0
RESULTS: dict[int, str] = {}


@pytest.fixture(scope="module")
def golden():
    checks, elapsed = run_golden()
    return checks, elapsed


@pytest.mark.parametrize("criterion", sorted(CRITERIA))
def test_criterion(golden, criterion):
    checks, _ = golden
    mine = [c for c in checks if c.criterion == criterion]
    ok = bool(mine) and criterion_status(mine)[criterion]
    line = f"criterion {criterion} ({CRITERIA[criterion]}): {'PASS' if ok else 'FAIL'}"
    RESULTS[criterion] = line
    print(line)
    failed = [c.line() for c in mine if not c.passed]
    assert ok, "\n".join(failed)


def test_suite_time_budget(golden):
    _, elapsed = golden
    line = f"verify-paper runtime {elapsed:.1f}s (limit {TIME_LIMIT:.0f}s): {'PASS' if elapsed < TIME_LIMIT else 'FAIL'}"
    RESULTS[0] = line
    print(line)
    assert elapsed < TIME_LIMIT
