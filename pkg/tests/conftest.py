import pytest

from graphforms import CalculusTower, Digraph


def example2_edges():
    return [
        (i, j)
        for i in range(1, 5)
        for j in range(1, 5)
        if i != j and (i, j) not in {(1, 4), (4, 1)}
    ]


@pytest.fixture(scope="session")
def tower_example1():
    return CalculusTower(Digraph(3, [(1, 2), (2, 3), (1, 3)]), 4)


@pytest.fixture(scope="session")
def tower_example2():
    return CalculusTower(Digraph(4, example2_edges()), 3)


@pytest.fixture(scope="session")
def tower_example3():
    return CalculusTower(Digraph(3, [(1, 2), (2, 3), (3, 1)]), 4)


@pytest.fixture(scope="session")
def tower_example5():
    return CalculusTower(Digraph(3, [(1, 2), (2, 1), (2, 3), (3, 2)]), 4)


@pytest.fixture(scope="session")
def tower_example6():
    return CalculusTower(Digraph(3, [(1, 2), (2, 1), (2, 3), (3, 1), (3, 2)]), 4)


@pytest.fixture(scope="session")
def tower_single_edge():
    return CalculusTower(Digraph(2, [(1, 2)]), 4)
