"""Edge-list text format.

Optional first line ``N M``; then one ``i j`` pair per line, whitespace
separated and 0-indexed. ``#`` starts a comment. A leading pair counts as a
header only when ``M`` equals the number of edge lines that follow and ``N``
is at least the number of distinct nodes they mention; otherwise it is an
edge. A lone ``N 0`` line is the header of an edgeless graph, so graphs with
fewer than two nodes survive a write and read.
"""

from __future__ import annotations

from dataclasses import dataclass, field
from typing import Dict, List, Tuple

from ..errors import LightconeError
from .types import Edge, UndirectedGraph, edge_key


class GraphParseError(LightconeError):
    """Exception raised when an edge list cannot be parsed."""

    def __init__(self, errors: List[str]) -> None:
        super().__init__("\n".join(errors))
        self.errors = errors


@dataclass
class _ParseContext:
    """Context carried through the two parsing passes."""

    relabel: bool
    rows: List[Tuple[int, List[str]]] = field(default_factory=list)
    labels: Dict[str, int] = field(default_factory=dict)
    errors: List[str] = field(default_factory=list)

    def add_error(self, line_number: int, message: str) -> None:
        self.errors.append(f"line {line_number}: {message}")


def parse_edge_list(text: str, relabel: bool = False) -> UndirectedGraph:
    """Parse edge-list text into a graph.

    Args:
        text: Edge-list document
        relabel: Map arbitrary node tokens to 0..n-1 in first-appearance order
            and keep the original names on the graph

    Returns:
        The parsed graph; without a header the node count is max id + 1

    Raises:
        GraphParseError: Listing every malformed line, self-loop, duplicate
            edge or out-of-range id with its line number
    """
    context = _ParseContext(relabel=relabel)

    # Pass 1: tokenise, dropping comments and blank lines
    for line_number, raw in enumerate(text.splitlines(), start=1):
        content = raw.split("#", 1)[0].strip()
        if not content:
            continue
        tokens = content.split()
        if len(tokens) != 2:
            context.add_error(
                line_number, f"expected two fields, got {len(tokens)}: {content!r}"
            )
            continue
        context.rows.append((line_number, tokens))

    if context.errors:
        raise GraphParseError(context.errors)

    # Pass 2: header detection and edge validation
    declared_n = _detect_header(context)
    edge_rows = context.rows[1:] if declared_n is not None else context.rows

    edges: List[Edge] = []
    seen: Dict[Edge, int] = {}
    max_id = -1
    for line_number, (first, second) in edge_rows:
        i = _node_id(context, line_number, first)
        j = _node_id(context, line_number, second)
        if i is None or j is None:
            continue
        if i == j:
            context.add_error(line_number, f"self-loop at node {first}")
            continue
        if declared_n is not None and max(i, j) >= declared_n:
            context.add_error(
                line_number,
                f"node id {max(i, j)} is not below the declared node count "
                f"{declared_n}",
            )
            continue
        key = edge_key(i, j)
        if key in seen:
            context.add_error(
                line_number,
                f"duplicate edge {first} {second} (first seen on line {seen[key]})",
            )
            continue
        seen[key] = line_number
        edges.append((i, j))
        max_id = max(max_id, i, j)

    if context.errors:
        raise GraphParseError(context.errors)

    if relabel:
        labels = tuple(sorted(context.labels, key=context.labels.__getitem__))
        return UndirectedGraph(n=len(labels), edges=tuple(edges), labels=labels)

    n = declared_n if declared_n is not None else max_id + 1
    return UndirectedGraph(n=n, edges=tuple(edges))


def format_edge_list(graph: UndirectedGraph) -> str:
    """Write ``graph`` with a header line, one edge per line, in stored order."""
    lines = [f"{graph.n} {graph.m}"]
    for i, j in graph.edges:
        lines.append(f"{graph.label(i)} {graph.label(j)}")
    return "\n".join(lines) + "\n"


def _detect_header(context: _ParseContext) -> int | None:
    if not context.rows:
        return None
    _, (first, second) = context.rows[0]
    if not (first.isdigit() and second.isdigit()):
        return None
    n, m = int(first), int(second)
    remaining = context.rows[1:]
    if m != len(remaining):
        return None
    # A genuine header declares at least as many nodes as the edges mention
    distinct = {token for _, tokens in remaining for token in tokens}
    if len(distinct) > n:
        return None
    return n


def _node_id(context: _ParseContext, line_number: int, token: str) -> int | None:
    if context.relabel:
        return context.labels.setdefault(token, len(context.labels))
    if not token.isdigit():
        context.add_error(
            line_number,
            f"node id {token!r} is not a nonnegative integer "
            "(parse with relabel to accept named nodes)",
        )
        return None
    return int(token)
