import os
import sys

import pytest
from hypothesis import HealthCheck, settings

sys.path.insert(0, os.path.dirname(__file__))

from edgecrit.chromatic import is_delta_critical  # noqa: E402
from edgecrit.corpus import connected_graphs  # noqa: E402

settings.register_profile(
    "repo",
    max_examples=150,
    deadline=None,
    derandomize=True,
    suppress_health_check=[HealthCheck.too_slow],
)
settings.load_profile("repo")

ACCEPTANCE_LINES: list[str] = []


@pytest.fixture(scope="session")
def connected_by_n():
    return {n: connected_graphs(n) for n in range(1, 9)}


@pytest.fixture(scope="session")
def critical_catalogue(connected_by_n):
    return [g for n in range(1, 9) for g in connected_by_n[n] if is_delta_critical(g)]


@pytest.fixture
def report_line():
    def record(number: int, ok: bool, detail: str) -> None:
        line = f"criterion {number:>2}: {'PASS' if ok else 'FAIL'}  {detail}"
        ACCEPTANCE_LINES.append(line)
        print(line)

    return record


def pytest_terminal_summary(terminalreporter):
    if ACCEPTANCE_LINES:
        terminalreporter.section("acceptance criteria")
        for line in sorted(ACCEPTANCE_LINES):
            terminalreporter.write_line(line)
