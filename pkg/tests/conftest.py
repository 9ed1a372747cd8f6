from itertools import combinations_with_replacement

import pytest

from hilbcoef import BettiTable, generate_ci


def ci_corpus(max_s=5, max_degree=6, extra_n=3):
    """Every complete intersection with s <= max_s, degrees <= max_degree, n = s..s+extra_n."""
    out = []
    for s in range(1, max_s + 1):
        for degrees in combinations_with_replacement(range(1, max_degree + 1), s):
            for n in range(s, s + extra_n + 1):
                out.append((degrees, n, generate_ci(degrees, n)))
    return out


@pytest.fixture
def ci23():
    return BettiTable.from_triples(2, [(0, 0, 1), (1, 2, 1), (1, 3, 1), (2, 5, 1)])


@pytest.fixture
def ci222():
    return BettiTable.from_triples(3, [(0, 0, 1), (1, 2, 3), (2, 4, 3), (3, 6, 1)])


@pytest.fixture
def pfaffians5():
    # 4x4 Pfaffians of a generic 5x5 skew matrix of linear forms
    return BettiTable.from_triples(5, [(0, 0, 1), (1, 2, 5), (2, 3, 5), (3, 5, 1)])


@pytest.fixture
def pfaffians7():
    # 6x6 Pfaffians of a generic 7x7 skew matrix of linear forms
    return BettiTable.from_triples(4, [(0, 0, 1), (1, 3, 7), (2, 4, 7), (3, 7, 1)])


_ACCEPTANCE_LINES = []


@pytest.fixture
def acceptance_line():
    def record(number, name, ok, detail):
        line = f"[{'PASS' if ok else 'FAIL'}] criterion {number} ({name}): {detail}"
        print(line)
        _ACCEPTANCE_LINES.append(line)

    return record


def pytest_terminal_summary(terminalreporter):
    if _ACCEPTANCE_LINES:
        terminalreporter.section("acceptance criteria")
        for line in sorted(_ACCEPTANCE_LINES, key=lambda s: int(s.split()[2])):
            terminalreporter.write_line(line)
