"""Closed-form local expectations and worst-case performance guarantees."""

from .bounds import (
    BOUNDS,
    BoundOptions,
    angle_relaxed_bound_3regular,
    angle_relaxed_objective,
    compute_bound,
    d_regular_objective,
    d_regular_zy1_bound,
    one_local_minmax_3regular,
    one_local_objective,
    single_term_bound,
    theorem1_bound,
    theorem1_bound_finite,
    theorem1_ratios,
    theorem2_bound,
    theorem2_terms,
    theta_sweep,
    zy2_bound,
    zy2_bound_3regular,
    zy2_objective,
    zy2_terms,
)
from .formulas import (
    cut_fraction_objective,
    cycle_contribution,
    down_square,
    tree_edge_0,
    tree_edge_1,
    tree_objective,
    triangle_down,
    triangle_up,
    two_regular_expected_cut,
    zero_local_edge,
    zero_local_edge_p2,
)
from .maximize import maximize_angles, theta_grid
from .types import AnalysisError, GuaranteeBound

__all__ = [
    "AnalysisError",
    "BOUNDS",
    "BoundOptions",
    "GuaranteeBound",
    "angle_relaxed_bound_3regular",
    "angle_relaxed_objective",
    "compute_bound",
    "cut_fraction_objective",
    "cycle_contribution",
    "d_regular_objective",
    "d_regular_zy1_bound",
    "down_square",
    "maximize_angles",
    "one_local_minmax_3regular",
    "one_local_objective",
    "single_term_bound",
    "theorem1_bound",
    "theorem1_bound_finite",
    "theorem1_ratios",
    "theorem2_bound",
    "theorem2_terms",
    "theta_grid",
    "theta_sweep",
    "tree_edge_0",
    "tree_edge_1",
    "tree_objective",
    "triangle_down",
    "triangle_up",
    "two_regular_expected_cut",
    "zero_local_edge",
    "zero_local_edge_p2",
    "zy2_bound",
    "zy2_bound_3regular",
    "zy2_objective",
    "zy2_terms",
]
