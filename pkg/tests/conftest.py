from __future__ import annotations

import os
import sys

import pytest
from hypothesis import HealthCheck, settings

sys.path.insert(0, os.path.dirname(__file__))

settings.register_profile("default", max_examples=60, deadline=None,
                          suppress_health_check=[HealthCheck.too_slow])
settings.register_profile("thorough", max_examples=500, deadline=None,
                          suppress_health_check=[HealthCheck.too_slow])
settings.load_profile(os.environ.get("HYPOTHESIS_PROFILE", "default"))

# criterion number -> (passed, elapsed seconds, limit seconds or None, note)
ACCEPTANCE: dict[int, tuple[bool, float, float | None, str]] = {}


@pytest.fixture
def record_criterion():
    def record(number: int, passed: bool, elapsed: float, limit: float | None, note: str = ""):
        ACCEPTANCE[number] = (passed, elapsed, limit, note)
    return record


def pytest_terminal_summary(terminalreporter):
    if not ACCEPTANCE:
        return
    terminalreporter.section("acceptance criteria")
    for number in sorted(ACCEPTANCE):
        passed, elapsed, limit, note = ACCEPTANCE[number]
        bound = f" (limit {limit:g} s)" if limit is not None else ""
        line = f"criterion {number:>2}: {'PASS' if passed else 'FAIL'}  {elapsed:8.2f} s{bound}"
        terminalreporter.write_line(line + (f"  {note}" if note else ""))
