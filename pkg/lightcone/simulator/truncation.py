"""The k-local neighbourhood of an edge."""

from __future__ import annotations

from collections import deque
from typing import Dict, FrozenSet, Tuple

from ..graphs import Edge, UndirectedGraph, edge_key
from .types import SimulationError


def node_distances(graph: UndirectedGraph, edge: Edge) -> Dict[int, int]:
    """BFS distance of every reachable node from the set {i, j}."""
    i, j = edge
    distance = {i: 0, j: 0}
    queue = deque([i, j])
    while queue:
        node = queue.popleft()
        for neighbor in graph.neighbors(node):
            if neighbor not in distance:
                distance[neighbor] = distance[node] + 1
                queue.append(neighbor)
    return distance


def k_local_subgraph(
    graph: UndirectedGraph, edge: Edge, k: int
) -> Tuple[FrozenSet[int], FrozenSet[Edge]]:
    """Nodes within distance k of the edge and the gates a k-step path can use.

    The edge set holds the centre edge and every edge with an endpoint at
    distance at most k - 1; edges joining two nodes at distance k are left out.
    Edges are returned as ``edge_key`` pairs.
    """
    if k < 0:
        raise SimulationError(f"k must be nonnegative, got {k}")
    i, j = edge
    if not (0 <= i < graph.n and 0 <= j < graph.n) or i == j:
        raise SimulationError(f"({i}, {j}) is not a pair of distinct nodes")

    distance = node_distances(graph, edge)
    nodes = frozenset(node for node, d in distance.items() if d <= k)
    edges = {edge_key(i, j)}
    for a, b in graph.edges:
        if min(distance.get(a, k), distance.get(b, k)) <= k - 1:
            edges.add(edge_key(a, b))
    return nodes, frozenset(edges)
