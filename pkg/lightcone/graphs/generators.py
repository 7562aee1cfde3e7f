"""Graph constructors and seeded random generators."""

from __future__ import annotations

import logging
from typing import List

import networkx as nx
import numpy as np

from .. import config
from ..errors import ResourceLimitError
from .types import Edge, GraphError, UndirectedGraph, edge_key

logger = logging.getLogger(__name__)


def generate_random_regular(
    n: int, d: int, seed: int | np.random.Generator | None = None
) -> UndirectedGraph:
    """Sample a simple d-regular graph from the pairing model.

    Every node contributes ``d`` points; a uniformly random perfect matching
    of the points is drawn and rejected whenever it produces a loop or a
    repeated edge.

    Args:
        n: Node count
        d: Degree
        seed: Seed or generator; equal seeds give equal graphs

    Returns:
        A simple d-regular graph with edges in sorted order

    Raises:
        GraphError: If n*d is odd or d is not below n
        ResourceLimitError: If no simple pairing is found within the retry cap
    """
    if n < 1 or d < 0:
        raise GraphError(f"Need n >= 1 and d >= 0, got n={n}, d={d}")
    if (n * d) % 2:
        raise GraphError(f"No {d}-regular graph on {n} nodes: n*d={n * d} is odd")
    if d >= n:
        raise GraphError(f"Degree {d} must be below the node count {n}")

    rng = np.random.default_rng(seed)
    points = np.repeat(np.arange(n), d)
    cap = config.REGULAR_RETRY_CAP

    for attempt in range(1, cap + 1):
        pairs = rng.permutation(points).reshape(-1, 2)
        edges = _simple_edges(pairs)
        if edges is not None:
            if attempt > 1:
                logger.debug("Pairing accepted after %d attempts", attempt)
            return UndirectedGraph(n=n, edges=tuple(sorted(edges)))

    raise ResourceLimitError(
        f"No simple {d}-regular pairing on {n} nodes after {cap} attempts", cap
    )


def _simple_edges(pairs: np.ndarray) -> List[Edge] | None:
    seen = set()
    for a, b in pairs.tolist():
        if a == b:
            return None
        key = edge_key(a, b)
        if key in seen:
            return None
        seen.add(key)
    return list(seen)


def generate_random_connected(
    n: int, edge_probability: float, seed: int | np.random.Generator | None = None
) -> UndirectedGraph:
    """Sample a connected G(n, p) graph by rejection."""
    if n < 1:
        raise GraphError(f"Need at least one node, got {n}")
    if not 0.0 < edge_probability <= 1.0:
        raise GraphError(f"Edge probability must be in (0, 1], got {edge_probability}")

    rng = np.random.default_rng(seed)
    cap = config.REGULAR_RETRY_CAP
    for _ in range(cap):
        graph = nx.gnp_random_graph(n, edge_probability, seed=int(rng.integers(2**31)))
        if nx.is_connected(graph):
            return UndirectedGraph(n=n, edges=tuple(sorted(graph.edges())))

    raise ResourceLimitError(
        f"No connected G({n}, {edge_probability}) sample after {cap} attempts", cap
    )


def cycle_graph(length: int) -> UndirectedGraph:
    if length < 3:
        raise GraphError(f"A cycle needs at least 3 nodes, got {length}")
    return UndirectedGraph(
        n=length, edges=tuple((i, (i + 1) % length) for i in range(length))
    )


def path_graph(n: int) -> UndirectedGraph:
    return UndirectedGraph(n=n, edges=tuple((i, i + 1) for i in range(n - 1)))


def complete_graph(n: int) -> UndirectedGraph:
    return UndirectedGraph(
        n=n, edges=tuple((i, j) for i in range(n) for j in range(i + 1, n))
    )


def star_graph(leaves: int) -> UndirectedGraph:
    """Star with centre 0 and ``leaves`` leaves."""
    return UndirectedGraph(
        n=leaves + 1, edges=tuple((0, leaf) for leaf in range(1, leaves + 1))
    )


def petersen_graph() -> UndirectedGraph:
    outer = [(i, (i + 1) % 5) for i in range(5)]
    spokes = [(i, i + 5) for i in range(5)]
    inner = [(5 + i, 5 + (i + 2) % 5) for i in range(5)]
    return UndirectedGraph(n=10, edges=tuple(outer + spokes + inner))
