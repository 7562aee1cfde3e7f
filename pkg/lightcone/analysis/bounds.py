"""Performance guarantees of the bipolar ZY ansatz on regular graphs."""

from __future__ import annotations

import itertools
import logging
from dataclasses import dataclass
from fractions import Fraction
from typing import Callable, Dict, List, Optional, Sequence, Tuple

import numpy as np
from numpy.typing import ArrayLike
from scipy.optimize import linprog, minimize

from .. import config
from .formulas import (
    cut_fraction_objective,
    down_square,
    tree_edge_0,
    tree_edge_1,
    tree_objective,
    triangle_down,
    triangle_up,
)
from .maximize import maximize_angles, theta_grid
from .types import AnalysisError, GuaranteeBound

logger = logging.getLogger(__name__)


def single_term_bound(k: int = 2) -> GuaranteeBound:
    """max 1/2 (1 + cos^k sin): one edge with k other gates on its head."""
    value, angles = maximize_angles(lambda t: 0.5 * (1 + np.cos(t) ** k * np.sin(t)))
    return GuaranteeBound("qaoa1-term", value, angles, {"k": k})


def theorem1_bound(n_plus_ratio: float = 0.0) -> GuaranteeBound:
    """0-local ZY_1 bound on 3-regular DAGs with N+/N sources per node.

    k = 2/3 + 4 (N+/N) / 3 and alpha = max 1/2 [1 + (1 - k) sin + k cos sin].
    """
    if not 0.0 <= n_plus_ratio <= 1.0:
        raise AnalysisError(f"N+/N must lie in [0, 1], got {n_plus_ratio}")
    k = 2.0 / 3.0 + 4.0 * n_plus_ratio / 3.0
    value, angles = maximize_angles(lambda t: cut_fraction_objective(k, t))
    witness = {"n_plus_ratio": n_plus_ratio, "k": k}
    return GuaranteeBound("zy1-0local", value, angles, witness)


def theorem1_ratios(n: int, n_plus: int, n_minus: int) -> Tuple[float, float, float]:
    """Fractions (r0, r1, r2) of edges whose head has 0, 1 or 2 other in-edges."""
    if n < 1 or n_plus < 1 or n_minus < 1:
        raise AnalysisError(
            f"Need N, N+, N- >= 1, got N={n}, N+={n_plus}, N-={n_minus}"
        )
    k = Fraction(2, 3) + Fraction(4 * n_plus, 3 * n)
    sinks = Fraction(n_minus, n)
    r2 = 2 * sinks
    r1 = k - Fraction(8, 3) * sinks
    r0 = 1 - k + Fraction(2, 3) * sinks
    return float(r0), float(r1), float(r2)


def theorem1_bound_finite(n: int, n_plus: int, n_minus: int) -> GuaranteeBound:
    """Finite-N form: max 1/2 [1 + sin (r0 + r1 cos + r2 cos^2)]."""
    r0, r1, r2 = theorem1_ratios(n, n_plus, n_minus)
    value, angles = maximize_angles(
        lambda t: 0.5 * (1 + np.sin(t) * (r0 + r1 * np.cos(t) + r2 * np.cos(t) ** 2))
    )
    witness = {"n": n, "n_plus": n_plus, "n_minus": n_minus, "r": [r0, r1, r2]}
    return GuaranteeBound("zy1-0local-finite", value, angles, witness)


def d_regular_objective(degree: int, theta: ArrayLike) -> np.ndarray:
    s, c = np.sin(theta), np.cos(theta)
    result = 0.5 + 0.5 * (2.0 / degree) * c ** (degree - 2) * s
    if degree > 2:
        result = result + 0.5 * (1 - 2.0 / degree) * c ** (degree - 3) * s
    return result


def d_regular_zy1_bound(degree: int) -> GuaranteeBound:
    """0-local ZY_1 bound on D-regular graphs with bipolar orientation."""
    if degree < 2:
        raise AnalysisError(f"D must be at least 2, got {degree}")
    value, angles = maximize_angles(lambda t: d_regular_objective(degree, t))
    return GuaranteeBound("dregular", value, angles, {"degree": degree})


def zy2_bound_3regular() -> GuaranteeBound:
    return zy2_bound(3)


# (tail out-degree - 1, head in-degree - 1) offsets above D - 3, in witness order
ZY2_EDGE_TYPES = ((0, 0), (0, 1), (1, 0), (1, 1))


def zy2_terms(degree: int, theta1: ArrayLike, theta2: ArrayLike) -> np.ndarray:
    """Per-type 0-local ZY_2 contributions, stacked on the first axis."""
    t1 = np.asarray(theta1, dtype=float)
    t2 = np.asarray(theta2, dtype=float)
    c1, s1, c2, s2 = np.cos(t1), np.sin(t1), np.cos(t2), np.sin(t2)
    terms = []
    for tail_offset, head_offset in ZY2_EDGE_TYPES:
        out_minus_one = degree - 3 + tail_offset
        in_minus_one = degree - 3 + head_offset
        head = s1 * c2 ** (degree + out_minus_one - in_minus_one) * c1**in_minus_one
        tail = s2 * c1**degree * c2**out_minus_one
        terms.append(head + tail)
    return np.stack(terms)


def zy2_objective(
    degree: int, ratios: Sequence[float], theta1: ArrayLike, theta2: ArrayLike
) -> np.ndarray:
    """1/2 + 1/2 sum_types r_type * term_type(theta1, theta2)."""
    weights = np.asarray(ratios, dtype=float).reshape((-1,) + (1,) * np.ndim(theta1))
    return 0.5 + 0.5 * np.sum(weights * zy2_terms(degree, theta1, theta2), axis=0)


def zy2_bound(degree: int = 3) -> GuaranteeBound:
    """0-local ZY_2 min-max over edge-type ratios.

    The outer minimum of a maximum of linear functions is solved by
    cutting planes: each round solves an LP over the collected angle cuts and
    adds the best response angles of its minimiser.
    """
    if degree < 3:
        raise AnalysisError(f"D must be at least 3, got {degree}")
    k_d = degree - 3 + 2.0 / degree
    low, high = degree - 3, degree - 2
    a_ub = np.array(
        [
            [low, high, low, high, 0.0],
            [low, low, high, high, 0.0],
        ]
    )
    b_ub = [k_d, k_d]
    a_eq = np.array([[1.0, 1.0, 1.0, 1.0, 0.0]])
    bounds = [(0.0, None)] * 4 + [(None, None)]

    # all edges of the lightest type always satisfy the degree constraints
    ratios = np.array([1.0, 0.0, 0.0, 0.0])
    cuts: List[np.ndarray] = []
    best: Tuple[float, Tuple[float, ...], np.ndarray] | None = None
    for round_index in range(config.MINMAX_MAX_ROUNDS):
        value, angles = maximize_angles(
            lambda t1, t2: zy2_objective(degree, ratios, t1, t2), dims=2
        )
        if best is None or value < best[0]:
            best = (value, angles, ratios.copy())
        cuts.append(zy2_terms(degree, *angles))

        # minimise t subject to t >= sum r * term(cut) for every cut
        rows = np.array([np.append(0.5 * cut, -1.0) for cut in cuts])
        result = linprog(
            c=[0, 0, 0, 0, 1],
            A_ub=np.vstack([a_ub, rows]),
            b_ub=b_ub + [-0.5] * len(cuts),
            A_eq=a_eq,
            b_eq=[1.0],
            bounds=bounds,
            method="highs",
        )
        if not result.success:
            raise AnalysisError(f"Ratio LP failed: {result.message}")
        lower = float(result.x[4])
        ratios = np.clip(result.x[:4], 0.0, None)
        logger.debug(
            "zy2 round %d: lower %.10f upper %.10f", round_index, lower, best[0]
        )
        if best[0] - lower < config.THETA_TOLERANCE:
            break

    assert best is not None
    value, angles, witness_ratios = best
    witness = {
        "degree": degree,
        "r": {f"{a}{b}": float(r) for (a, b), r in zip(ZY2_EDGE_TYPES, witness_ratios)},
    }
    alpha = float(zy2_objective(degree, witness_ratios, *angles))
    return GuaranteeBound("zy2-0local", alpha, angles, witness)


def one_local_objective(
    r_up: float, r_down: float, r_square: float, theta: ArrayLike
) -> np.ndarray:
    """F(r, theta) / (3/2 - r_up - r_down - r_square) for 3-regular ZY_1."""
    trees_0 = 0.5 - r_up - r_square
    trees_1 = 1 - 2 * r_up - 3 * r_down - 4 * r_square
    numerator = (
        r_up * triangle_up(theta)
        + r_down * triangle_down(theta)
        + r_square * down_square(theta)
        + trees_0 * tree_edge_0(theta)
        + trees_1 * tree_edge_1(theta)
    )
    return numerator / (1.5 - r_up - r_down - r_square)


def _one_local_feasible(r: Sequence[float]) -> bool:
    r_up, r_down, r_square = r
    return (
        min(r_up, r_down, r_square) >= 0
        and 0.5 - r_up - r_square >= 0
        and 1 - 2 * r_up - 3 * r_down - 4 * r_square >= 0
    )


def one_local_minmax_3regular(step: float = 1.0 / 40.0) -> GuaranteeBound:
    """1-local ZY_1 min-max over upper/lower triangle and down-square densities."""
    grid = theta_grid()

    def worst(r: Sequence[float]) -> float:
        if not _one_local_feasible(r):
            return float("inf")
        return float(np.max(one_local_objective(*r, grid)))

    axes = [np.arange(0.0, limit + 1e-12, step) for limit in (0.5, 1.0 / 3.0, 0.25)]
    start = min(
        (r for r in itertools.product(*axes) if _one_local_feasible(r)), key=worst
    )
    refined = minimize(
        worst, np.array(start), method="Nelder-Mead", options={"xatol": 1e-6}
    )
    chosen = refined.x if worst(refined.x) < worst(start) else start
    ratios = tuple(float(x) for x in chosen)

    _, angles = maximize_angles(lambda t: one_local_objective(*ratios, t))
    alpha = float(one_local_objective(*ratios, angles[0]))
    witness = {"r_up": ratios[0], "r_down": ratios[1], "r_square": ratios[2]}
    return GuaranteeBound("zy1-1local", alpha, angles, witness)


def theorem2_terms(k1: int, k2: int, theta: ArrayLike) -> Tuple[np.ndarray, int]:
    """F(k1, k2, theta) and G(k1, k2) of the two-cycle worst-case family."""
    s, c = np.sin(theta), np.cos(theta)
    f = (
        tree_objective(theta) * (2 ** (k1 + 2) + 2 ** (k2 + 2) - 3)
        - s ** (2 * k1 + 2) * c ** (2 * k1 + 1) * 2**k1
        - s ** (2 * k2 + 2) * c**2 * 2**k2
        + 2 ** (k1 + k2) * s ** (2 * (k1 + k2) + 3) * c ** (2 * k1 + 2)
    )
    g = 2 ** (k1 + 2) + 2 ** (k2 + 2) - 4
    return f, g


def theorem2_cell(
    k1: int, k2: int, tree_value: float
) -> Tuple[float, Tuple[float, ...]]:
    """min{max g, max_theta F/G} for one (k1, k2) cell."""

    def ratio(t: ArrayLike) -> np.ndarray:
        f, g = theorem2_terms(k1, k2, t)
        return f / g

    value, angles = maximize_angles(ratio)
    return min(tree_value, value), angles


def theorem2_bound(k_max: Optional[int] = None) -> GuaranteeBound:
    """Worst case over pairs of odd cycle families of lengths 2 k1 + 3, 2 k2 + 3."""
    limit = config.THEOREM2_K_MAX if k_max is None else k_max
    if limit < 8:
        raise AnalysisError(f"k_max must be at least 8, got {limit}")
    tree_value, tree_angles = maximize_angles(tree_objective)

    best: Tuple[float, int, int, Tuple[float, ...]] | None = None
    for k1 in range(limit + 1):
        for k2 in range(limit + 1):
            value, angles = theorem2_cell(k1, k2, tree_value)
            if best is None or value < best[0]:
                best = (value, k1, k2, angles)
    assert best is not None

    value, k1, k2, angles = best
    witness = {
        "k1": k1,
        "k2": k2,
        "cycle_lengths": [2 * k1 + 3, 2 * k2 + 3],
        "tree_value": tree_value,
    }
    if value >= tree_value:
        angles = tree_angles
    return GuaranteeBound("theorem2", value, angles, witness)


def angle_relaxed_objective(theta: ArrayLike, theta_prime: ArrayLike) -> np.ndarray:
    return 0.5 * (
        1 + np.sin(theta) / 3 + (2.0 / 3.0) * np.sin(theta_prime) * np.cos(theta_prime)
    )


def angle_relaxed_bound_3regular() -> GuaranteeBound:
    """0-local bound when edges into in-degree-2 heads get their own angle."""
    value, angles = maximize_angles(angle_relaxed_objective, dims=2)
    return GuaranteeBound("angle-relaxed", value, angles)


@dataclass(frozen=True, slots=True)
class BoundOptions:
    """Inputs a bound may read; unused fields are ignored."""

    degree: int = 3
    n_plus_ratio: float = 0.0
    k_max: Optional[int] = None
    k: int = 2


BoundFunction = Callable[[BoundOptions], GuaranteeBound]

BOUNDS: Dict[str, BoundFunction] = {
    "zy1-0local": lambda options: theorem1_bound(options.n_plus_ratio),
    "qaoa1-term": lambda options: single_term_bound(options.k),
    "dregular": lambda options: d_regular_zy1_bound(options.degree),
    "zy2-0local": lambda options: zy2_bound(options.degree),
    "zy1-1local": lambda options: one_local_minmax_3regular(),
    "theorem2": lambda options: theorem2_bound(options.k_max),
    "angle-relaxed": lambda options: angle_relaxed_bound_3regular(),
}


def compute_bound(
    method: str, options: Optional[BoundOptions] = None
) -> GuaranteeBound:
    """Look up ``method`` in ``BOUNDS`` and evaluate it."""
    try:
        function = BOUNDS[method]
    except KeyError as exc:
        known = ", ".join(sorted(BOUNDS))
        raise AnalysisError(
            f"Unknown bound '{method}' (expected one of {known})"
        ) from exc
    return function(options or BoundOptions())


def theta_sweep(
    bound: GuaranteeBound, points: Optional[int] = None
) -> List[Tuple[float, float]]:
    """(theta, objective) rows along the first angle, other angles held at optimum."""
    grid = theta_grid(points)
    rest = bound.angles[1:]
    witness = bound.witness
    curves: Dict[str, Callable[[np.ndarray], np.ndarray]] = {
        "zy1-0local": lambda t: cut_fraction_objective(witness["k"], t),
        "qaoa1-term": lambda t: 0.5 * (1 + np.cos(t) ** witness["k"] * np.sin(t)),
        "dregular": lambda t: d_regular_objective(witness["degree"], t),
        "zy2-0local": lambda t: zy2_objective(
            witness["degree"],
            [witness["r"][f"{a}{b}"] for a, b in ZY2_EDGE_TYPES],
            t,
            np.full_like(t, rest[0]),
        ),
        "zy1-1local": lambda t: one_local_objective(
            witness["r_up"], witness["r_down"], witness["r_square"], t
        ),
        "theorem2": lambda t: np.minimum(
            witness["tree_value"],
            np.divide(*theorem2_terms(witness["k1"], witness["k2"], t)),
        ),
        "angle-relaxed": lambda t: angle_relaxed_objective(t, np.full_like(t, rest[0])),
    }
    if bound.method not in curves:
        raise AnalysisError(f"No theta sweep for bound '{bound.method}'")
    values = curves[bound.method](grid)
    return [(float(t), float(v)) for t, v in zip(grid, values)]
