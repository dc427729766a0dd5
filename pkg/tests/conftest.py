from fractions import Fraction

import pytest

from dpohyper import Point2, make_hypergraph

ACCEPTANCE_LINES: list[str] = []


def pt(ident, x, y):
    return Point2(ident, Fraction(x), Fraction(y))


@pytest.fixture
def p3():
    return make_hypergraph(["v1", "v2", "v3"], [["v1", "v2"], ["v2", "v3"]])


@pytest.fixture
def record_criterion():
    def record(number: int, passed: bool, detail: str):
        line = f"[{'PASS' if passed else 'FAIL'}] criterion {number:>2}: {detail}"
        ACCEPTANCE_LINES.append(line)
        print(line)

    return record


def pytest_terminal_summary(terminalreporter):
    if ACCEPTANCE_LINES:
        terminalreporter.section("acceptance criteria")
        for line in sorted(ACCEPTANCE_LINES, key=lambda s: int(s.split("criterion")[1].split(":")[0])):
            terminalreporter.write_line(line)
