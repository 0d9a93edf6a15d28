import sys
from pathlib import Path

sys.path.insert(0, str(Path(__file__).parent))

import pytest

_CRITERIA = []


@pytest.fixture
def criterion(capsys):
    """Record one acceptance verdict and echo it past output capture."""

    def record(n, label, ok, detail=""):
        line = f"criterion {n:2d} {'PASS' if ok else 'FAIL'}  {label}"
        if detail and detail.strip("[] ;"):
            line += f"  [{detail}]"
        _CRITERIA.append((n, line))
        with capsys.disabled():
            print("\n" + line)
        return ok

    return record


def pytest_terminal_summary(terminalreporter):
    if _CRITERIA:
        terminalreporter.section("acceptance criteria")
        for _, line in sorted(_CRITERIA):
            terminalreporter.write_line(line)
