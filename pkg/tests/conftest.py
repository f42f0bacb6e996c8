"""Shared pytest wiring: the acceptance summary block.

Acceptance tests append one line per criterion; the lines are printed in a
dedicated section at the end of the run so they stay visible under output
capture.
"""

import pytest

_lines: list = []


@pytest.fixture
def acceptance_recorder():
    return _lines.append


def pytest_terminal_summary(terminalreporter, exitstatus, config):
    if _lines:
        terminalreporter.section("acceptance criteria")
        for line in _lines:
            terminalreporter.write_line(line)
