import pytest

from jetgraph.graph import Graph, parse_graph


def graph(text: str) -> Graph:
    return parse_graph(text)


@pytest.fixture
def k32() -> Graph:
    return parse_graph("x1 x4\nx1 x5\nx2 x4\nx2 x5\nx3 x4\nx3 x5\n")


@pytest.fixture
def p3() -> Graph:
    return parse_graph("x y\ny z\n")


@pytest.fixture
def p4() -> Graph:
    return parse_graph("x y\ny z\nz w\n")
