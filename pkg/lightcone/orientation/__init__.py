"""Acyclic orientations: light-cone BFS, bipolar variants and degree statistics."""

from .bipolar import bipolar_orientation_bfs, bipolar_orientation_dfs
from .blocks import orient_by_blocks
from .dag import (
    BipolarReport,
    OrientationError,
    OrientedDag,
    format_orientation,
    parse_orientation,
    validate_bipolar,
)
from .degrees import (
    asymptotic_in_degree_bounds,
    averaged_heads_in_degree,
    averaged_tails_out_degree,
    degree_pair,
    heads_in_degree_bounds,
    longest_path_length,
)
from .lightcone import bfs_lightcone_orientation

__all__ = [
    "BipolarReport",
    "OrientationError",
    "OrientedDag",
    "asymptotic_in_degree_bounds",
    "averaged_heads_in_degree",
    "averaged_tails_out_degree",
    "bfs_lightcone_orientation",
    "bipolar_orientation_bfs",
    "bipolar_orientation_dfs",
    "degree_pair",
    "format_orientation",
    "heads_in_degree_bounds",
    "longest_path_length",
    "orient_by_blocks",
    "parse_orientation",
    "validate_bipolar",
]
