"""Oriented graphs, bipolar validation and the orientation text format."""

from __future__ import annotations

from dataclasses import dataclass, field
from typing import Dict, List, Sequence, Tuple

import networkx as nx

from ..errors import LightconeError
from ..graphs import Edge, UndirectedGraph, edge_key


class OrientationError(LightconeError):
    """Exception raised for invalid orientations or orientation requests."""

    pass


@dataclass(frozen=True, slots=True)
class OrientedDag:
    """An orientation of ``base``: ``direction[k]`` is (tail, head) of edge k.

    ``topo_order`` lists nodes tails-first (every edge i -> j has i before j);
    it is the scheduling order of even ansatz rounds. It is None only for
    cyclic orientations, which exist solely so they can be validated.
    ``visit_order`` is the root-first traversal of light-cone DAGs.
    """

    base: UndirectedGraph
    direction: Tuple[Edge, ...]
    topo_order: Tuple[int, ...] | None
    visit_order: Tuple[int, ...] | None = None
    _in: Tuple[Tuple[int, ...], ...] = field(init=False, repr=False, compare=False)
    _out: Tuple[Tuple[int, ...], ...] = field(init=False, repr=False, compare=False)

    def __post_init__(self) -> None:
        if len(self.direction) != self.base.m:
            raise OrientationError(
                f"Expected {self.base.m} directed edges, got {len(self.direction)}"
            )
        incoming: List[List[int]] = [[] for _ in range(self.base.n)]
        outgoing: List[List[int]] = [[] for _ in range(self.base.n)]
        for (i, j), (tail, head) in zip(self.base.edges, self.direction):
            if edge_key(i, j) != edge_key(tail, head):
                raise OrientationError(
                    f"Directed edge {tail}->{head} does not orient edge ({i}, {j})"
                )
            outgoing[tail].append(head)
            incoming[head].append(tail)
        object.__setattr__(self, "_in", tuple(tuple(sorted(x)) for x in incoming))
        object.__setattr__(self, "_out", tuple(tuple(sorted(x)) for x in outgoing))

        if self.topo_order is not None:
            if sorted(self.topo_order) != list(range(self.base.n)):
                raise OrientationError("topo_order must be a permutation of the nodes")
            position = {node: k for k, node in enumerate(self.topo_order)}
            for tail, head in self.direction:
                if position[tail] > position[head]:
                    raise OrientationError(
                        f"topo_order places head {head} before tail {tail}"
                    )

    @classmethod
    def from_directions(
        cls,
        base: UndirectedGraph,
        directed: Sequence[Edge],
        visit_order: Sequence[int] | None = None,
    ) -> OrientedDag:
        """Orient ``base`` by a set of (tail, head) pairs, one per edge.

        The topological order is the lexicographically smallest one, or None
        when the orientation has a directed cycle.
        """
        lookup: Dict[Edge, Edge] = {}
        for tail, head in directed:
            key = edge_key(tail, head)
            if key in lookup:
                raise OrientationError(f"Edge ({tail}, {head}) is oriented twice")
            lookup[key] = (tail, head)
        try:
            direction = tuple(lookup[edge_key(i, j)] for i, j in base.edges)
        except KeyError as exc:
            raise OrientationError(f"Edge {exc.args[0]} has no orientation") from exc

        digraph = nx.DiGraph()
        digraph.add_nodes_from(range(base.n))
        digraph.add_edges_from(direction)
        try:
            order: Tuple[int, ...] | None = tuple(
                nx.lexicographical_topological_sort(digraph)
            )
        except nx.NetworkXUnfeasible:
            order = None
        return cls(
            base=base,
            direction=direction,
            topo_order=order,
            visit_order=tuple(visit_order) if visit_order is not None else None,
        )

    @property
    def is_acyclic(self) -> bool:
        return self.topo_order is not None

    def predecessors(self, node: int) -> Tuple[int, ...]:
        """Tails of the edges entering ``node``, ascending."""
        return self._in[node]

    def successors(self, node: int) -> Tuple[int, ...]:
        """Heads of the edges leaving ``node``, ascending."""
        return self._out[node]

    def in_degree(self, node: int) -> int:
        return len(self._in[node])

    def out_degree(self, node: int) -> int:
        return len(self._out[node])

    @property
    def sources(self) -> frozenset[int]:
        return frozenset(v for v in self.base.nodes() if not self._in[v])

    @property
    def sinks(self) -> frozenset[int]:
        return frozenset(v for v in self.base.nodes() if not self._out[v])

    def has_directed_edge(self, tail: int, head: int) -> bool:
        return head in self._out[tail]

    def degree_pair(self, tail: int, head: int) -> Tuple[int, int]:
        """(deg+(tail), deg-(head)) of the directed edge tail -> head."""
        if not self.has_directed_edge(tail, head):
            if self.base.has_edge(tail, head):
                raise OrientationError(
                    f"Edge ({tail}, {head}) is oriented {head}->{tail}"
                )
            raise OrientationError(f"({tail}, {head}) is not an edge")
        return self.out_degree(tail), self.in_degree(head)

    def reversed(self) -> OrientedDag:
        """Flip every edge; the topological order reverses with it."""
        return OrientedDag(
            base=self.base,
            direction=tuple((head, tail) for tail, head in self.direction),
            topo_order=(
                None if self.topo_order is None else tuple(reversed(self.topo_order))
            ),
        )


@dataclass(frozen=True, slots=True)
class BipolarReport:
    """Acyclicity and source/sink counts; counts are None for cyclic inputs."""

    acyclic: bool
    n_plus: int | None
    n_minus: int | None

    @property
    def is_bipolar(self) -> bool:
        return self.acyclic and self.n_plus == 1 and self.n_minus == 1


def validate_bipolar(dag: OrientedDag) -> BipolarReport:
    """Report acyclicity plus the number of sources and sinks."""
    digraph = nx.DiGraph()
    digraph.add_nodes_from(dag.base.nodes())
    digraph.add_edges_from(dag.direction)
    if not nx.is_directed_acyclic_graph(digraph):
        return BipolarReport(acyclic=False, n_plus=None, n_minus=None)
    return BipolarReport(
        acyclic=True, n_plus=len(dag.sources), n_minus=len(dag.sinks)
    )


def format_orientation(dag: OrientedDag) -> str:
    """``i -> j`` per edge in stored order, then ``order:`` with topo_order."""
    if dag.topo_order is None:
        raise OrientationError("Cannot serialise a cyclic orientation")
    lines = [f"{tail} -> {head}" for tail, head in dag.direction]
    lines.append("order: " + " ".join(str(node) for node in dag.topo_order))
    return "\n".join(lines) + "\n"


def parse_orientation(text: str) -> OrientedDag:
    """Inverse of ``format_orientation``."""
    directed: List[Edge] = []
    order: List[int] | None = None
    errors: List[str] = []
    for line_number, raw in enumerate(text.splitlines(), start=1):
        content = raw.split("#", 1)[0].strip()
        if not content:
            continue
        if content.startswith("order:"):
            try:
                order = [int(token) for token in content[len("order:") :].split()]
            except ValueError:
                errors.append(f"line {line_number}: malformed order line")
            continue
        parts = content.split("->")
        try:
            tail, head = (int(part) for part in parts)
        except ValueError:
            errors.append(f"line {line_number}: expected 'i -> j', got {content!r}")
            continue
        directed.append((tail, head))

    if order is None:
        errors.append("missing 'order:' line")
    if errors:
        raise OrientationError("\n".join(errors))
    assert order is not None

    base = UndirectedGraph(n=len(order), edges=tuple(directed))
    return OrientedDag(base=base, direction=tuple(directed), topo_order=tuple(order))
