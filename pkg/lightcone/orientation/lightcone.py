"""Recursive breadth-first orientation used by the light-cone ansatz.

Every node gets a tuple label. The root is labelled with the current prefix;
the remaining nodes of its component are layered by BFS distance, each layer
is split into connected components (ordered by smallest id, rooted at that
id) and each component is labelled recursively with prefix + (distance,
component index). Edges point from the larger label to the smaller one, so
the overall root is the unique sink.
"""

from __future__ import annotations

from collections import deque
from typing import Dict, FrozenSet, List, Tuple

import networkx as nx

from ..graphs import UndirectedGraph, require_connected
from .dag import OrientationError, OrientedDag

Label = Tuple[int, ...]


def bfs_lightcone_orientation(graph: UndirectedGraph, root: int) -> OrientedDag:
    """Orient ``graph`` toward ``root`` by recursive BFS layering.

    Raises:
        GraphError: If the graph is disconnected
        OrientationError: If ``root`` is not a node
    """
    if not 0 <= root < graph.n:
        raise OrientationError(f"Root {root} is not a node of the graph")
    require_connected(graph)

    labels: Dict[int, Label] = {}
    visit: List[int] = []
    full = graph.to_networkx()
    _label_component(graph, full, frozenset(graph.nodes()), root, (), labels, visit)

    directed = []
    for i, j in graph.edges:
        directed.append((i, j) if labels[i] > labels[j] else (j, i))

    return OrientedDag(
        base=graph,
        direction=tuple(directed),
        topo_order=tuple(reversed(visit)),
        visit_order=tuple(visit),
    )


def _label_component(
    graph: UndirectedGraph,
    full: nx.Graph,
    nodes: FrozenSet[int],
    root: int,
    prefix: Label,
    labels: Dict[int, Label],
    visit: List[int],
) -> None:
    labels[root] = prefix
    visit.append(root)

    distance = {root: 0}
    layers: Dict[int, List[int]] = {}
    queue = deque([root])
    while queue:
        node = queue.popleft()
        for neighbor in graph.neighbors(node):
            if neighbor in nodes and neighbor not in distance:
                distance[neighbor] = distance[node] + 1
                layers.setdefault(distance[neighbor], []).append(neighbor)
                queue.append(neighbor)

    for depth in sorted(layers):
        layer = frozenset(layers[depth])
        for index, component in enumerate(_components(full, layer)):
            _label_component(
                graph,
                full,
                component,
                min(component),
                prefix + (depth, index),
                labels,
                visit,
            )


def _components(full: nx.Graph, nodes: FrozenSet[int]) -> List[FrozenSet[int]]:
    """Connected components of the induced subgraph, ordered by smallest id."""
    components = nx.connected_components(full.subgraph(nodes))
    return sorted((frozenset(component) for component in components), key=min)
