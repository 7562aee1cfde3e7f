"""Shared fixtures."""

import logging

import pytest

from lightcone.graphs import (
    UndirectedGraph,
    complete_graph,
    cycle_graph,
    load_named_graph,
    path_graph,
)


@pytest.fixture
def k2() -> UndirectedGraph:
    return UndirectedGraph.from_edges(2, [(0, 1)])


@pytest.fixture
def triangle() -> UndirectedGraph:
    return load_named_graph("triangle")


@pytest.fixture
def k4() -> UndirectedGraph:
    return complete_graph(4)


@pytest.fixture
def square() -> UndirectedGraph:
    return cycle_graph(4)


@pytest.fixture
def petersen() -> UndirectedGraph:
    return load_named_graph("petersen")


@pytest.fixture
def bowtie() -> UndirectedGraph:
    return load_named_graph("bowtie")


@pytest.fixture
def path3() -> UndirectedGraph:
    return path_graph(3)


@pytest.fixture
def cube() -> UndirectedGraph:
    """The 3-cube: 3-regular, bipartite, maximum cut 12."""
    edges = [(i, i ^ bit) for i in range(8) for bit in (1, 2, 4) if i < i ^ bit]
    return UndirectedGraph.from_edges(8, edges)


@pytest.fixture(autouse=True)
def quiet_logging():
    logging.getLogger("lightcone").setLevel(logging.WARNING)
    yield
