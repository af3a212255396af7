import pytest

from ybtwist.birack import derive_birack, make_birack
from ybtwist.census import enumerate_solutions
from ybtwist.structures import validate_left_quasigroup

TRIVIAL2 = [[0, 1], [0, 1]]
P2 = [[1, 0], [1, 0]]
SIGMA_TABLE = [[0, 1], [1, 0]]
D4 = [[1, 0, 3, 2], [1, 0, 3, 2], [0, 1, 2, 3], [0, 1, 2, 3]]
TAU = (1, 0, 3, 2)

ACCEPTANCE_LINES: list[str] = []


@pytest.fixture
def p2():
    return derive_birack(validate_left_quasigroup(P2))


@pytest.fixture
def d4():
    return derive_birack(validate_left_quasigroup(D4))


@pytest.fixture
def trivial2():
    return derive_birack(validate_left_quasigroup(TRIVIAL2))


@pytest.fixture
def bad_birack():
    """circ = [[0,1],[1,0]] with the projection x . y = x."""
    return make_birack(SIGMA_TABLE, [[0, 0], [1, 1]])


@pytest.fixture(scope="session")
def census():
    """Isomorphism-class representatives for n = 1..4."""
    return {n: enumerate_solutions(n) for n in range(1, 5)}


def pytest_terminal_summary(terminalreporter):
    if ACCEPTANCE_LINES:
        terminalreporter.section("acceptance criteria")
        for line in ACCEPTANCE_LINES:
            terminalreporter.write_line(line)
