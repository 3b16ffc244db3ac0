import os
import sys

import pytest

sys.path.insert(0, os.path.dirname(__file__))

ACCEPTANCE_LINES = []


def record_criterion(number, title, passed, detail):
    line = f"[{'PASS' if passed else 'FAIL'}] criterion {number:>2}: {title} -- {detail}"
    ACCEPTANCE_LINES.append(line)
    print(line)
    return line


def pytest_terminal_summary(terminalreporter):
    if ACCEPTANCE_LINES:
        terminalreporter.section("acceptance criteria")
        for line in sorted(ACCEPTANCE_LINES, key=lambda s: int(s.split("criterion")[1].split(":")[0])):
            terminalreporter.write_line(line)


@pytest.fixture(scope="session")
def small_groups():
    """A spread of named groups up to order 24."""
    from grpcensus import build

    specs = ["C(1)", "C(2)", "C(5)", "C(6)", "C(12)", "D(6)", "D(8)", "D(10)", "D(12)",
             "Q(8)", "Q(12)", "E(2,3)", "A(4)", "C(2)xC(4)", "C(3)xC(3)", "S(4)",
             "EXT16(1,0)", "EXT16(-1,1)", "D(8)xC(3)"]
    return {s: build(s) for s in specs}
