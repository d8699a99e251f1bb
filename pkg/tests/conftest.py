from itertools import product

import pytest

from lamplighter import GenSet, build_ball, evaluate

ACCEPTANCE_LINES: list[str] = []


def enumerate_words(genset, max_len):
    """element -> (shortest length, number of words of that length), by brute force."""
    genset = GenSet(genset)
    table = {}
    for n in range(max_len + 1):
        for letters in product(genset.letters, repeat=n):
            e = evaluate(letters)
            if e not in table:
                table[e] = (n, 1)
            elif table[e][0] == n:
                table[e] = (n, table[e][1] + 1)
    return table


@pytest.fixture(scope="session")
def ball12():
    return {gs: build_ball(gs, 12) for gs in GenSet}


def pytest_terminal_summary(terminalreporter):
    if ACCEPTANCE_LINES:
        terminalreporter.section("acceptance criteria")
        for line in ACCEPTANCE_LINES:
            terminalreporter.write_line(line)
