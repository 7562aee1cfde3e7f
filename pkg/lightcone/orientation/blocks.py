"""Orientation of graphs that are not biconnected, block by block."""

from __future__ import annotations

import logging
from collections import deque
from typing import Dict, List, Set

from ..graphs import Edge, UndirectedGraph, biconnected_components, edge_key
from .bipolar import bipolar_orientation_dfs
from .dag import OrientationError, OrientedDag

logger = logging.getLogger(__name__)


def orient_by_blocks(graph: UndirectedGraph, root: int) -> OrientedDag:
    """Join bipolar orientations of every block along the block-cut tree.

    Each block is st-oriented from the node through which it is first reached
    (``root`` for the blocks containing it) toward that node's smallest
    neighbour inside the block. Bridges point away from ``root``. The result
    is acyclic with ``root`` as its only source.

    Raises:
        GraphError: If the graph is disconnected
        OrientationError: If ``root`` is not a node
    """
    if not 0 <= root < graph.n:
        raise OrientationError(f"Root {root} is not a node of the graph")
    decomposition = biconnected_components(graph)

    membership: Dict[int, List[int]] = {node: [] for node in graph.nodes()}
    for component in range(decomposition.component_count):
        for node in decomposition.component_nodes(component):
            membership[node].append(component)

    bridge_offset = len(decomposition.blocks)
    directed: Dict[Edge, Edge] = {}
    done: Set[int] = set()
    queue = deque([root])
    while queue:
        entry = queue.popleft()
        for component in membership[entry]:
            if component in done:
                continue
            done.add(component)
            nodes = decomposition.component_nodes(component)
            if component >= bridge_offset:
                (other,) = nodes - {entry}
                directed[edge_key(entry, other)] = (entry, other)
            else:
                block, global_ids = graph.induced(sorted(nodes))
                local = {node: index for index, node in enumerate(global_ids)}
                sink = min(node for node in graph.neighbors(entry) if node in nodes)
                dag = bipolar_orientation_dfs(block, local[entry], local[sink])
                for tail, head in dag.direction:
                    i, j = global_ids[tail], global_ids[head]
                    directed[edge_key(i, j)] = (i, j)
            queue.extend(sorted(nodes - {entry}))

    logger.debug(
        "Oriented %d blocks and %d bridges from root %d",
        len(decomposition.blocks),
        len(decomposition.bridges),
        root,
    )
    return OrientedDag.from_directions(graph, list(directed.values()))
