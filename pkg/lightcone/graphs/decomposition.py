"""Bridge/block decomposition and recombination of per-block MaxCut solutions."""

from __future__ import annotations

from collections import deque
from typing import Dict, List, Mapping, Sequence, Tuple

import networkx as nx

from .types import BlockDecomposition, Edge, GraphError, UndirectedGraph, edge_key


def connected_component_count(graph: UndirectedGraph) -> int:
    if graph.n == 0:
        return 0
    return nx.number_connected_components(graph.to_networkx())


def is_connected(graph: UndirectedGraph) -> bool:
    return graph.n > 0 and connected_component_count(graph) == 1


def is_biconnected(graph: UndirectedGraph) -> bool:
    """True for connected graphs without articulation nodes (K2 included)."""
    if graph.n < 2 or not is_connected(graph):
        return False
    return not any(True for _ in nx.articulation_points(graph.to_networkx()))


def require_connected(graph: UndirectedGraph) -> None:
    """Raise GraphError naming the component count unless ``graph`` is connected."""
    components = connected_component_count(graph)
    if components != 1:
        raise GraphError(
            f"Graph must be connected, found {components} connected components"
        )


def biconnected_components(graph: UndirectedGraph) -> BlockDecomposition:
    """Split a connected graph into bridges and biconnected blocks.

    Single-edge components of the depth-first block search are bridges; every
    other component is a block. Blocks are ordered by their smallest edge.

    Raises:
        GraphError: If the graph is disconnected
    """
    require_connected(graph)

    bridges: List[Edge] = []
    blocks: List[Tuple[Edge, ...]] = []
    for component in nx.biconnected_component_edges(graph.to_networkx()):
        edges = tuple(sorted(edge_key(i, j) for i, j in component))
        if len(edges) == 1:
            bridges.append(edges[0])
        else:
            blocks.append(edges)

    bridges.sort()
    blocks.sort()
    block_nodes = tuple(
        frozenset(n for edge in edges for n in edge) for edges in blocks
    )
    articulation = frozenset(nx.articulation_points(graph.to_networkx()))

    tree: List[Tuple[int, int]] = []
    components = list(block_nodes) + [frozenset(bridge) for bridge in bridges]
    for index, nodes in enumerate(components):
        for node in sorted(nodes & articulation):
            tree.append((index, node))

    return BlockDecomposition(
        bridges=tuple(bridges),
        blocks=block_nodes,
        block_edges=tuple(blocks),
        articulation_nodes=articulation,
        block_cut_tree=tuple(tree),
    )


def combine_block_solutions(
    graph: UndirectedGraph,
    decomposition: BlockDecomposition,
    per_block: Sequence[Mapping[int, int]],
) -> Tuple[int, ...]:
    """Glue per-block assignments into one assignment of the whole graph.

    Components are visited breadth-first over the block-cut tree. A block
    whose bit at the shared articulation node disagrees with the bit already
    fixed there is complemented as a whole, which keeps its cut. Every bridge
    is cut, so the result cuts |bridges| + sum of the block cuts.

    Args:
        graph: The decomposed graph
        decomposition: Output of ``biconnected_components(graph)``
        per_block: One node -> bit mapping per block, in block order

    Returns:
        A 0/1 tuple of length ``graph.n``

    Raises:
        GraphError: If a block assignment is missing or misses a block node
    """
    if len(per_block) != len(decomposition.blocks):
        raise GraphError(
            f"Expected {len(decomposition.blocks)} block assignments, "
            f"got {len(per_block)}"
        )
    for index, (nodes, assignment) in enumerate(zip(decomposition.blocks, per_block)):
        missing = sorted(nodes - set(assignment))
        if missing:
            raise GraphError(f"Assignment for block {index} is missing nodes {missing}")

    if graph.n == 1 and decomposition.component_count == 0:
        return (0,)

    containing: Dict[int, List[int]] = {}
    for component in range(decomposition.component_count):
        for node in decomposition.component_nodes(component):
            containing.setdefault(node, []).append(component)

    bits: Dict[int, int] = {}
    visited = set()
    start = containing[0][0] if 0 in containing else 0
    queue = deque([start])
    visited.add(start)

    while queue:
        component = queue.popleft()
        nodes = decomposition.component_nodes(component)
        anchors = sorted(node for node in nodes if node in bits)

        if component < len(decomposition.blocks):
            local = per_block[component]
            flip = 0
            if anchors:
                anchor = anchors[0]
                flip = (local[anchor] ^ bits[anchor]) & 1
            for node in nodes:
                bits[node] = (local[node] ^ flip) & 1
        else:
            i, j = decomposition.bridges[component - len(decomposition.blocks)]
            if i in bits:
                bits[j] = 1 - bits[i]
            elif j in bits:
                bits[i] = 1 - bits[j]
            else:
                bits[i], bits[j] = 0, 1

        for node in sorted(nodes):
            for neighbor in containing[node]:
                if neighbor not in visited:
                    visited.add(neighbor)
                    queue.append(neighbor)

    return tuple(bits[node] for node in range(graph.n))
