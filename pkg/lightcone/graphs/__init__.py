"""Undirected graphs: representation, I/O, generation, decomposition, cycles."""

from .cycles import CycleCount, count_simple_cycles, cycle_space_dimension, girth
from .decomposition import (
    biconnected_components,
    combine_block_solutions,
    connected_component_count,
    is_biconnected,
    is_connected,
    require_connected,
)
from .generators import (
    complete_graph,
    cycle_graph,
    generate_random_connected,
    generate_random_regular,
    path_graph,
    petersen_graph,
    star_graph,
)
from .loader import GraphLibrary, load_graph, load_named_graph, load_named_graphs
from .parser import GraphParseError, format_edge_list, parse_edge_list
from .types import BlockDecomposition, Edge, GraphError, UndirectedGraph, edge_key

__all__ = [
    "BlockDecomposition",
    "CycleCount",
    "Edge",
    "GraphError",
    "GraphLibrary",
    "GraphParseError",
    "UndirectedGraph",
    "biconnected_components",
    "combine_block_solutions",
    "complete_graph",
    "connected_component_count",
    "count_simple_cycles",
    "cycle_graph",
    "cycle_space_dimension",
    "edge_key",
    "format_edge_list",
    "generate_random_connected",
    "generate_random_regular",
    "girth",
    "is_biconnected",
    "is_connected",
    "load_graph",
    "load_named_graph",
    "load_named_graphs",
    "parse_edge_list",
    "path_graph",
    "petersen_graph",
    "require_connected",
    "star_graph",
]
