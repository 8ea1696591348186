import sys
from pathlib import Path

import pytest

sys.path.insert(0, str(Path(__file__).parent))

from semispace.worlds import build_universe  # noqa: E402

_acceptance = []


@pytest.fixture
def xy():
    return build_universe(["x", "y"])


@pytest.fixture
def xy_actual(xy):
    return xy.world(3)


def pytest_runtest_logreport(report):
    if report.when == "call" and "test_acceptance.py" in report.nodeid:
        _acceptance.append((report.nodeid.split("::")[-1], report.outcome))


def pytest_terminal_summary(terminalreporter):
    if not _acceptance:
        return
    terminalreporter.section("acceptance criteria")
    for name, outcome in _acceptance:
        terminalreporter.write_line(f"{'PASS' if outcome == 'passed' else 'FAIL'}  {name}")
