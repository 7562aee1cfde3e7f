"""Shared graph types."""

from __future__ import annotations

from dataclasses import dataclass, field
from typing import Dict, Mapping, Sequence, Tuple

import networkx as nx

from ..errors import LightconeError

Edge = Tuple[int, int]


class GraphError(LightconeError):
    """Exception raised for invalid or unsuitable graphs."""

    pass


def edge_key(i: int, j: int) -> Edge:
    """Orientation-free key for an undirected edge."""
    return (i, j) if i < j else (j, i)


@dataclass(frozen=True, slots=True)
class UndirectedGraph:
    """Simple undirected graph on nodes 0..n-1.

    Edges keep the order (and endpoint order) they were given in so that
    edge lists round-trip unchanged. ``labels`` holds the external names of
    relabelled inputs.
    """

    n: int
    edges: Tuple[Edge, ...]
    labels: Tuple[str, ...] | None = None
    _adjacency: Tuple[Tuple[int, ...], ...] = field(
        init=False, repr=False, compare=False
    )
    _index: Mapping[Edge, int] = field(init=False, repr=False, compare=False)

    def __post_init__(self) -> None:
        if self.n < 0:
            raise GraphError(f"Node count must be nonnegative, got {self.n}")
        if self.labels is not None and len(self.labels) != self.n:
            raise GraphError(
                f"Expected {self.n} labels, got {len(self.labels)}"
            )

        neighbors: list[list[int]] = [[] for _ in range(self.n)]
        index: Dict[Edge, int] = {}
        for position, (i, j) in enumerate(self.edges):
            if not (0 <= i < self.n and 0 <= j < self.n):
                raise GraphError(f"Edge ({i}, {j}) has a node outside 0..{self.n - 1}")
            if i == j:
                raise GraphError(f"Self-loop at node {i}")
            key = edge_key(i, j)
            if key in index:
                raise GraphError(f"Duplicate edge ({i}, {j})")
            index[key] = position
            neighbors[i].append(j)
            neighbors[j].append(i)

        object.__setattr__(
            self, "_adjacency", tuple(tuple(sorted(ns)) for ns in neighbors)
        )
        object.__setattr__(self, "_index", index)

    @classmethod
    def from_edges(cls, n: int, edges: Sequence[Sequence[int]]) -> UndirectedGraph:
        """Build a graph from any sequence of node pairs."""
        return cls(n=n, edges=tuple((int(i), int(j)) for i, j in edges))

    @property
    def m(self) -> int:
        """Number of edges."""
        return len(self.edges)

    def nodes(self) -> range:
        return range(self.n)

    def neighbors(self, node: int) -> Tuple[int, ...]:
        """Neighbors of ``node`` in ascending id order."""
        return self._adjacency[node]

    def degree(self, node: int) -> int:
        return len(self._adjacency[node])

    def degrees(self) -> Tuple[int, ...]:
        return tuple(len(ns) for ns in self._adjacency)

    def regular_degree(self) -> int | None:
        """Common degree of a regular graph, None otherwise."""
        degrees = set(self.degrees())
        if len(degrees) == 1:
            return degrees.pop()
        return None

    def has_edge(self, i: int, j: int) -> bool:
        return edge_key(i, j) in self._index

    def edge_position(self, i: int, j: int) -> int:
        """Index of edge {i, j} in ``edges``."""
        try:
            return self._index[edge_key(i, j)]
        except KeyError as exc:
            raise GraphError(f"({i}, {j}) is not an edge") from exc

    def label(self, node: int) -> str:
        """External name of ``node``."""
        return self.labels[node] if self.labels is not None else str(node)

    def to_networkx(self) -> nx.Graph:
        graph = nx.Graph()
        graph.add_nodes_from(range(self.n))
        graph.add_edges_from(self.edges)
        return graph

    def induced(self, nodes: Sequence[int]) -> Tuple[UndirectedGraph, Tuple[int, ...]]:
        """Induced subgraph relabelled to 0..k-1 plus the local-to-global map."""
        ordered = tuple(sorted(set(nodes)))
        local = {node: position for position, node in enumerate(ordered)}
        edges = tuple(
            (local[i], local[j])
            for i, j in self.edges
            if i in local and j in local
        )
        return UndirectedGraph(n=len(ordered), edges=edges), ordered


@dataclass(frozen=True, slots=True)
class BlockDecomposition:
    """Bridges and biconnected blocks of a connected graph.

    Components of the block-cut tree are numbered blocks first, then bridges;
    ``block_cut_tree`` lists (component, articulation node) incidences.
    """

    bridges: Tuple[Edge, ...]
    blocks: Tuple[frozenset[int], ...]
    block_edges: Tuple[Tuple[Edge, ...], ...]
    articulation_nodes: frozenset[int]
    block_cut_tree: Tuple[Tuple[int, int], ...]

    def component_nodes(self, component: int) -> frozenset[int]:
        """Nodes of a block-cut tree component (block or bridge)."""
        if component < len(self.blocks):
            return self.blocks[component]
        i, j = self.bridges[component - len(self.blocks)]
        return frozenset((i, j))

    @property
    def component_count(self) -> int:
        return len(self.blocks) + len(self.bridges)
