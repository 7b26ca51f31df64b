import sys
from pathlib import Path

import pytest

sys.path.insert(0, str(Path(__file__).parent))

_ACCEPTANCE = []


@pytest.fixture
def acceptance_report():
    """Collects one verdict line per acceptance criterion for the end-of-run summary."""

    def report(number, title, passed, detail, elapsed):
        line = f"criterion {number}: {'PASS' if passed else 'FAIL'}  {title}  ({detail}; {elapsed:.1f}s)"
        _ACCEPTANCE.append((number, line))
        print(line)

    return report


def pytest_terminal_summary(terminalreporter):
    if not _ACCEPTANCE:
        return
    terminalreporter.section("acceptance criteria")
    for _, line in sorted(_ACCEPTANCE):
        terminalreporter.write_line(line)
