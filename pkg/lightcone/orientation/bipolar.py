"""Bipolar (st-) orientations of biconnected graphs.

Both variants compute an st-ordering (s first, t last, every other node with
a neighbour before and after it) and orient each edge from the earlier node
to the later one.
"""

from __future__ import annotations

import logging
from collections import deque
from typing import Dict, List, Mapping, Sequence, Set, Tuple

import networkx as nx

from ..graphs import Edge, GraphError, UndirectedGraph, is_biconnected
from .dag import OrientationError, OrientedDag

logger = logging.getLogger(__name__)


def bipolar_orientation_dfs(graph: UndirectedGraph, s: int, t: int) -> OrientedDag:
    """st-orientation from a depth-first st-numbering (linear time).

    Args:
        graph: Biconnected graph
        s: Source node
        t: Sink node, adjacent to ``s``

    Returns:
        Orientation with unique source ``s`` and unique sink ``t``

    Raises:
        GraphError: If the graph is not biconnected
        OrientationError: If s, t are not distinct adjacent nodes
    """
    _check_terminals(graph, s, t)
    if graph.n == 2:
        return _orient_by_order(graph, [s, t])

    preorder: Dict[int, int] = {s: 0}
    parent: Dict[int, int] = {}
    low: Dict[int, int] = {s: s}
    visited = [s]

    first_children = [t] + [u for u in graph.neighbors(s) if u != t]
    stack = [(s, iter(first_children))]
    while stack:
        node, neighbors = stack[-1]
        descended = False
        for neighbor in neighbors:
            if neighbor not in preorder:
                parent[neighbor] = node
                preorder[neighbor] = len(visited)
                low[neighbor] = neighbor
                visited.append(neighbor)
                stack.append((neighbor, iter(graph.neighbors(neighbor))))
                descended = True
                break
            if neighbor == parent.get(node):
                continue
            if preorder[neighbor] < preorder[low[node]]:
                low[node] = neighbor
        if descended:
            continue
        stack.pop()
        if stack:
            up = stack[-1][0]
            if preorder[low[node]] < preorder[low[up]]:
                low[up] = low[node]

    # Sign-list construction over a doubly linked list
    before: Dict[int, int | None] = {s: None, t: s}
    after: Dict[int, int | None] = {s: t, t: None}
    minus = {s: True}
    for node in visited[2:]:
        up = parent[node]
        if minus[low[node]]:
            _insert_before(before, after, up, node)
            minus[up] = False
        else:
            _insert_after(before, after, up, node)
            minus[up] = True

    order: List[int] = []
    cursor: int | None = s
    while cursor is not None:
        order.append(cursor)
        cursor = after[cursor]
    return _orient_by_order(graph, order)


def bipolar_orientation_bfs(graph: UndirectedGraph, s: int, t: int) -> OrientedDag:
    """st-orientation from ears of a breadth-first tree (near-linear time).

    The tree is rooted at ``s``. Every non-tree edge closes an ear made of the
    edge and the tree paths above its ends, up to the first nodes already placed.
    Ears are taken level by level of their lowest common ancestor, so none is
    longer than twice the tree depth, and each one is spliced into the running
    st-ordering right after its earlier end.

    Raises:
        GraphError: If the graph is not biconnected
        OrientationError: If s, t are not distinct adjacent nodes
    """
    _check_terminals(graph, s, t)
    if graph.n == 2:
        return _orient_by_order(graph, [s, t])

    parent: Dict[int, int] = {}
    depth = {s: 0}
    children: Dict[int, List[int]] = {node: [] for node in graph.nodes()}
    visit = [s]
    queue = deque([s])
    while queue:
        node = queue.popleft()
        for neighbor in graph.neighbors(node):
            if neighbor not in depth:
                parent[neighbor] = node
                depth[neighbor] = depth[node] + 1
                children[node].append(neighbor)
                visit.append(neighbor)
                queue.append(neighbor)

    nontree = [
        (i, j) for i, j in graph.edges if parent.get(i) != j and parent.get(j) != i
    ]
    tree = nx.DiGraph([(parent[node], node) for node in visit[1:]])
    lca = dict(
        nx.tree_all_pairs_lowest_common_ancestor(tree, root=s, pairs=set(nontree))
    )
    by_ancestor: Dict[int, List[Edge]] = {node: [] for node in visit}
    incident: Dict[int, List[Edge]] = {node: [] for node in visit}
    for edge in nontree:
        by_ancestor[lca[edge]].append(edge)
        incident[edge[0]].append(edge)
        incident[edge[1]].append(edge)

    # Child of the common ancestor on the way down to each end, None at the ancestor
    branch: Dict[Tuple[Edge, int], int | None] = {}
    path: List[int] = []
    stack = [s]
    while stack:
        node = stack.pop()
        del path[depth[node] :]
        path.append(node)
        for edge in incident[node]:
            top = lca[edge]
            branch[edge, node] = None if node == top else path[depth[top] + 1]
        stack.extend(children[node])

    order = _EarOrdering(parent, graph.n)
    for top in visit:
        ears = by_ancestor[top]
        if not ears:
            continue
        waiting: Dict[int, List[Edge]] = {}
        for edge in ears:
            for end in edge:
                side = branch[edge, end]
                if side is not None:
                    waiting.setdefault(side, []).append(edge)
        done: Set[Edge] = set()
        if top == s:
            first = _first_ear(ears, branch, t)
            order.start(first, s, t)
            done.add(first)
            seen = {branch[first, first[0]], branch[first, first[1]]}
        elif top in order.label:
            seen = {child for child in children[top] if child in order.label}
        else:
            raise OrientationError(
                f"Node {top} is never reached; graph is not biconnected"
            )
        # An ear is open once one of its sides hangs below an already placed child
        ready = deque(child for child in children[top] if child in seen)
        while ready:
            for edge in waiting.pop(ready.popleft(), []):
                if edge in done:
                    continue
                done.add(edge)
                order.add(edge)
                for end in edge:
                    side = branch[edge, end]
                    if side is not None and side not in seen:
                        seen.add(side)
                        ready.append(side)
        if len(done) < len(ears):
            raise OrientationError(
                f"Ears below node {top} close on it; graph is not biconnected"
            )
    if len(order.label) < graph.n:
        raise OrientationError("Some nodes lie on no ear; graph is not biconnected")
    return _orient_by_order(graph, order.nodes())


class _EarOrdering:
    """Linked st-ordering with integer labels for constant-time comparisons.

    Labels start ``2 ** (n + 1)`` apart. An ear with k inner nodes splits one
    gap into k + 1 parts and nested ears have disjoint inner nodes, so no gap
    gets narrower than the ear that lands in it.
    """

    def __init__(self, parent: Mapping[int, int], n: int) -> None:
        self.parent = parent
        self.spacing = 1 << (n + 1)
        self.label: Dict[int, int] = {}
        self.after: Dict[int, int | None] = {}
        self.head: int | None = None

    def start(self, edge: Edge, s: int, t: int) -> None:
        """Place the cycle through ``s`` and ``t`` closed by ``edge``."""
        self.label[s] = 0
        up_x, up_y = self._climb(edge[0]), self._climb(edge[1])
        if up_x[-2] != t:
            up_x, up_y = up_y, up_x
        sequence = [s] + up_y[-2::-1] + up_x[:-1]
        for index, node in enumerate(sequence):
            self.label[node] = index * self.spacing
        for node, following in zip(sequence, sequence[1:] + [None]):
            self.after[node] = following
        self.head = s

    def add(self, edge: Edge) -> None:
        """Splice the open ear of ``edge`` in after its earlier end."""
        ear = self._climb(edge[0])[::-1] + self._climb(edge[1])
        if ear[0] == ear[-1]:
            raise OrientationError(f"Ear through {edge} is closed at node {ear[0]}")
        if self.label[ear[0]] > self.label[ear[-1]]:
            ear.reverse()
        inner = ear[1:-1]
        if not inner:
            return
        anchor = ear[0]
        following = self.after[anchor]
        if following is None:
            raise OrientationError(f"Cannot place nodes after the sink {anchor}")
        step = (self.label[following] - self.label[anchor]) // (len(inner) + 1)
        previous = anchor
        for index, node in enumerate(inner, start=1):
            self.label[node] = self.label[anchor] + index * step
            self.after[previous] = node
            previous = node
        self.after[previous] = following

    def nodes(self) -> List[int]:
        order: List[int] = []
        cursor = self.head
        while cursor is not None:
            order.append(cursor)
            cursor = self.after[cursor]
        return order

    def _climb(self, node: int) -> List[int]:
        chain = [node]
        while chain[-1] not in self.label:
            chain.append(self.parent[chain[-1]])
        return chain


def _first_ear(
    ears: Sequence[Edge], branch: Mapping[Tuple[Edge, int], int | None], t: int
) -> Edge:
    for edge in ears:
        sides = (branch[edge, edge[0]], branch[edge, edge[1]])
        if None not in sides and t in sides:
            return edge
    raise OrientationError(f"No cycle through the sink {t}; graph is not biconnected")


def _check_terminals(graph: UndirectedGraph, s: int, t: int) -> None:
    for node in (s, t):
        if not 0 <= node < graph.n:
            raise OrientationError(f"Node {node} is not in the graph")
    if s == t:
        raise OrientationError(f"Source and sink must differ, got s = t = {s}")
    if not graph.has_edge(s, t):
        raise OrientationError(
            f"({s}, {t}) is not an edge; bipolar orientation needs adjacent s and t"
        )
    if not is_biconnected(graph):
        raise GraphError("Bipolar orientation requires a biconnected graph")


def _orient_by_order(graph: UndirectedGraph, order: Sequence[int]) -> OrientedDag:
    position = {node: index for index, node in enumerate(order)}
    direction = tuple(
        (i, j) if position[i] < position[j] else (j, i) for i, j in graph.edges
    )
    dag = OrientedDag(base=graph, direction=direction, topo_order=tuple(order))
    if len(dag.sources) != 1 or len(dag.sinks) != 1:
        raise OrientationError(
            f"st-ordering produced {len(dag.sources)} sources and "
            f"{len(dag.sinks)} sinks"
        )
    logger.debug("Bipolar orientation from %d to %d", order[0], order[-1])
    return dag


def _insert_before(
    before: Dict[int, int | None], after: Dict[int, int | None], anchor: int, node: int
) -> None:
    previous = before[anchor]
    before[node], after[node] = previous, anchor
    before[anchor] = node
    if previous is not None:
        after[previous] = node


def _insert_after(
    before: Dict[int, int | None], after: Dict[int, int | None], anchor: int, node: int
) -> None:
    following = after[anchor]
    before[node], after[node] = anchor, following
    after[anchor] = node
    if following is not None:
        before[following] = node
