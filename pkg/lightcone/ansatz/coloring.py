"""Greedy proper edge colouring for parallel gate layers."""

from __future__ import annotations

from typing import Dict, List, Set

from ..graphs import Edge, UndirectedGraph, edge_key


def greedy_edge_coloring(graph: UndirectedGraph) -> Dict[Edge, int]:
    """Give each edge, in stored order, the smallest colour free at both ends.

    Keys are ``edge_key`` pairs. At most 2*max_degree - 1 colours are used.
    """
    used: List[Set[int]] = [set() for _ in graph.nodes()]
    colors: Dict[Edge, int] = {}
    for i, j in graph.edges:
        color = 0
        while color in used[i] or color in used[j]:
            color += 1
        colors[edge_key(i, j)] = color
        used[i].add(color)
        used[j].add(color)
    return colors


def color_count(colors: Dict[Edge, int]) -> int:
    return max(colors.values(), default=-1) + 1


def is_proper_coloring(graph: UndirectedGraph, colors: Dict[Edge, int]) -> bool:
    """True when every edge is coloured and no two edges at a node share a colour."""
    seen: Set[tuple[int, int]] = set()
    for i, j in graph.edges:
        key = edge_key(i, j)
        if key not in colors:
            return False
        for node in key:
            if (node, colors[key]) in seen:
                return False
            seen.add((node, colors[key]))
    return True
