"""Closed-form expectations of local sub-circuits.

Every function accepts scalars or numpy arrays for the angles.
"""

from __future__ import annotations

import numpy as np
from numpy.typing import ArrayLike

from .types import AnalysisError


def zero_local_edge(k: int, theta: ArrayLike) -> np.ndarray:
    """<Z_i Z_j> of ZY_1 restricted to one edge whose head has k other in-edges."""
    if k < 0:
        raise AnalysisError(f"k must be nonnegative, got {k}")
    theta = np.asarray(theta, dtype=float)
    return -np.cos(theta) ** k * np.sin(theta)


def zero_local_edge_p2(
    deg_plus_i: int,
    deg_minus_j: int,
    degree: int,
    theta1: ArrayLike,
    theta2: ArrayLike,
) -> np.ndarray:
    """<Z_i Z_j> of ZY_2 restricted to the edge i -> j of a D-regular DAG."""
    if not 1 <= deg_minus_j <= degree:
        raise AnalysisError(f"deg-(j) must lie in 1..{degree}, got {deg_minus_j}")
    if not 1 <= deg_plus_i <= degree:
        raise AnalysisError(f"deg+(i) must lie in 1..{degree}, got {deg_plus_i}")
    t1 = np.asarray(theta1, dtype=float)
    t2 = np.asarray(theta2, dtype=float)
    c1, s1, c2, s2 = np.cos(t1), np.sin(t1), np.cos(t2), np.sin(t2)
    deg_plus_j = degree - deg_minus_j
    head_term = s1 * c1 ** (deg_minus_j - 1) * c2 ** (deg_plus_i + deg_plus_j)
    tail_term = s2 * c2 ** (deg_plus_i - 1) * c1**degree
    return -head_term - tail_term


def cycle_contribution(
    length: int, in_degree: int, theta: ArrayLike, single_source_sink: bool = True
) -> np.ndarray:
    """Contribution of one cycle to the expected <Z Z> sum.

    Cycles with one cycle-source and one cycle-sink contribute
    -(-sin)^(|C|-1) cos^(I_C); any other orientation contributes 0.
    """
    if length < 3:
        raise AnalysisError(f"Cycle length must be at least 3, got {length}")
    theta = np.asarray(theta, dtype=float)
    if not single_source_sink:
        return np.zeros_like(theta)
    return -((-np.sin(theta)) ** (length - 1)) * np.cos(theta) ** in_degree


def two_regular_expected_cut(
    length: int, theta1: ArrayLike, theta2: ArrayLike
) -> np.ndarray:
    """Exact expected cut of bipolar ZY_1 on C_L with in-degree-relaxed angles.

    ``theta1`` drives the L - 2 edges into in-degree-1 heads and ``theta2`` the
    two edges into the sink.
    """
    if length < 3:
        raise AnalysisError(f"Cycle length must be at least 3, got {length}")
    s1 = np.sin(np.asarray(theta1, dtype=float))
    t2 = np.asarray(theta2, dtype=float)
    pair = np.sin(t2) * np.cos(t2)
    closing = 2 * (-s1) ** (length - 2) * pair
    return 0.5 * (length + (length - 2) * s1 + 2 * pair + closing)


def triangle_up(theta: ArrayLike) -> np.ndarray:
    """Cut expectation of the three centre edges of an upper triangle."""
    s, c = np.sin(theta), np.cos(theta)
    return 0.5 * (3 + s + 2 * c * s - 2 * c * s**2)


def triangle_down(theta: ArrayLike) -> np.ndarray:
    """Cut expectation of the three centre edges of a lower triangle."""
    s, c = np.sin(theta), np.cos(theta)
    return 0.5 * (3 + 3 * c * s - 2 * c**2 * s**2)


def down_square(theta: ArrayLike) -> np.ndarray:
    """Cut expectation of the five centre edges of a down-square."""
    s, c = np.sin(theta), np.cos(theta)
    return 0.5 * (5 + s + 4 * c * s - 2 * c * s**2 - 2 * c**2 * s**2)


def tree_edge_0(theta: ArrayLike) -> np.ndarray:
    """Oriented-tree centre edge whose head has no other in-edge."""
    return 0.5 * (1 + np.sin(theta))


def tree_edge_1(theta: ArrayLike) -> np.ndarray:
    """Oriented-tree centre edge whose head has one other in-edge."""
    return 0.5 * (1 + np.sin(theta) * np.cos(theta))


def cut_fraction_objective(k: float, theta: ArrayLike) -> np.ndarray:
    """1/2 [1 + (1 - k) sin + k cos sin], the 0-local ZY_1 cut fraction."""
    s, c = np.sin(theta), np.cos(theta)
    return 0.5 * (1 + (1 - k) * s + k * c * s)


def tree_objective(theta: ArrayLike) -> np.ndarray:
    """g(theta): the cut fraction of 3-regular DAGs dominated by trees."""
    return cut_fraction_objective(2.0 / 3.0, theta)
