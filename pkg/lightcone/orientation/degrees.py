"""Degree statistics of oriented graphs that the performance guarantees use."""

from __future__ import annotations

from fractions import Fraction
from typing import Dict, Tuple

from .dag import OrientationError, OrientedDag


def averaged_heads_in_degree(dag: OrientedDag) -> Fraction:
    """I_h = (1/M) * sum over edges i -> j of (deg-(j) - 1), exactly."""
    if dag.base.m == 0:
        return Fraction(0)
    total = sum(dag.in_degree(head) - 1 for _, head in dag.direction)
    return Fraction(total, dag.base.m)


def averaged_tails_out_degree(dag: OrientedDag) -> Fraction:
    """O_t = (1/M) * sum over edges i -> j of (deg+(i) - 1), exactly."""
    if dag.base.m == 0:
        return Fraction(0)
    total = sum(dag.out_degree(tail) - 1 for tail, _ in dag.direction)
    return Fraction(total, dag.base.m)


def degree_pair(dag: OrientedDag, edge: Tuple[int, int]) -> Tuple[int, int]:
    """(deg+(tail), deg-(head)) of a directed edge of ``dag``."""
    tail, head = edge
    return dag.degree_pair(tail, head)


def heads_in_degree_bounds(
    degree: int, n: int, n_plus: int, n_minus: int
) -> Tuple[Fraction, Fraction]:
    """Finite-size (lower, upper) bounds on I_h for a D-regular DAG.

    With x = (N+ + N-) / N the upper bound is D - 3 + 2/D + (2 - 2/D) x. The
    lower bound is D/2 - 1 + (D/2) x for even D and
    D/2 - 1 + 1/(2D) + (D/2 - 1/(2D)) x for odd D.
    """
    if degree < 1 or n < 1:
        raise OrientationError(f"Need D >= 1 and N >= 1, got D={degree}, N={n}")
    d = Fraction(degree)
    x = Fraction(n_plus + n_minus, n)
    upper = d - 3 + 2 / d + (2 - 2 / d) * x
    if degree % 2 == 0:
        lower = d / 2 - 1 + d / 2 * x
    else:
        lower = d / 2 - 1 + 1 / (2 * d) + (d / 2 - 1 / (2 * d)) * x
    return lower, upper


def asymptotic_in_degree_bounds(degree: int) -> Tuple[Fraction, Fraction]:
    """(g_D, k_D): the N -> infinity limits of ``heads_in_degree_bounds``."""
    d = Fraction(degree)
    upper = d - 3 + 2 / d
    if degree % 2 == 0:
        return d / 2 - 1, upper
    return d / 2 - 1 + 1 / (2 * d), upper


def longest_path_length(dag: OrientedDag) -> int:
    """Number of edges on the longest directed path."""
    if dag.topo_order is None:
        raise OrientationError("Longest path is undefined for a cyclic orientation")
    length: Dict[int, int] = {node: 0 for node in dag.topo_order}
    for node in dag.topo_order:
        for head in dag.successors(node):
            length[head] = max(length[head], length[node] + 1)
    return max(length.values(), default=0)
