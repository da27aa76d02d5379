import pytest

from cmcodim2.monomial import VariableSet
from cmcodim2.syzygy import MonomialIdeal
from cmcodim2.trees_graphs import LabeledTree, SimpleGraph

# The worked example with two Hilbert-Burch matrices.
EXAMPLE_GENS = ["x4*x5*x6", "x1*x5*x6", "x1*x2*x6", "x1*x2*x3*x5"]
GAMMA1 = ((1, 2), (2, 3), (3, 4))
GAMMA2 = ((1, 2), (2, 3), (2, 4))
GAMMA3 = ((1, 2), (2, 4), (3, 4))

SEVEN_EDGES = [(1, 2), (1, 3), (2, 3), (3, 4), (3, 5), (4, 5), (5, 6), (5, 7)]


@pytest.fixture
def x6():
    return VariableSet.standard(6)


@pytest.fixture
def example_ideal(x6):
    return MonomialIdeal.parse(x6, EXAMPLE_GENS)


@pytest.fixture
def gamma1():
    return LabeledTree.from_edges(GAMMA1)


@pytest.fixture
def gamma2():
    return LabeledTree.from_edges(GAMMA2)


@pytest.fixture
def gamma3():
    return LabeledTree.from_edges(GAMMA3)


@pytest.fixture
def seven_graph():
    return SimpleGraph.from_edges(SEVEN_EDGES)


def all_minors_ideal(n):
    """u_i = product of every variable except x_i."""
    vs = VariableSet.standard(n)
    return MonomialIdeal.parse(vs, ["*".join(f"x{k}" for k in range(1, n + 1) if k != i) for i in range(1, n + 1)])


@pytest.fixture
def star():
    return LabeledTree.from_edges([(1, 2), (2, 3), (2, 4)])


@pytest.fixture
def path3():
    return LabeledTree.from_edges([(1, 2), (2, 3)])


ACCEPTANCE_LINES: list[str] = []


def pytest_terminal_summary(terminalreporter):
    if ACCEPTANCE_LINES:
        terminalreporter.section("acceptance criteria")
        for line in sorted(ACCEPTANCE_LINES, key=lambda s: int(s.split()[0][2:])):
            terminalreporter.write_line(line)
