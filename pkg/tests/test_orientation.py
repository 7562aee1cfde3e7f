import time
from fractions import Fraction

import pytest
from hypothesis import given, settings
from hypothesis import strategies as st

from lightcone.graphs import (
    GraphError,
    UndirectedGraph,
    complete_graph,
    cycle_graph,
    generate_random_regular,
    is_biconnected,
    load_named_graph,
    path_graph,
    star_graph,
)
from lightcone.orientation import (
    OrientationError,
    OrientedDag,
    asymptotic_in_degree_bounds,
    averaged_heads_in_degree,
    averaged_tails_out_degree,
    bfs_lightcone_orientation,
    bipolar_orientation_bfs,
    bipolar_orientation_dfs,
    format_orientation,
    heads_in_degree_bounds,
    longest_path_length,
    orient_by_blocks,
    parse_orientation,
    validate_bipolar,
)

BIPOLAR_METHODS = [bipolar_orientation_dfs, bipolar_orientation_bfs]


def assert_st_ordering(dag: OrientedDag, s: int, t: int) -> None:
    report = validate_bipolar(dag)
    assert report.is_bipolar
    assert dag.sources == frozenset({s})
    assert dag.sinks == frozenset({t})
    assert dag.topo_order[0] == s
    assert dag.topo_order[-1] == t


class TestOrientedDag:
    def test_from_directions_finds_topological_order(self, path3):
        dag = OrientedDag.from_directions(path3, [(2, 1), (1, 0)])
        assert dag.topo_order == (2, 1, 0)
        assert dag.predecessors(0) == (1,)
        assert dag.successors(2) == (1,)

    def test_cyclic_orientation_has_no_order(self, triangle):
        dag = OrientedDag.from_directions(triangle, [(0, 1), (1, 2), (2, 0)])
        assert not dag.is_acyclic
        report = validate_bipolar(dag)
        assert not report.acyclic
        assert report.n_plus is None
        assert not report.is_bipolar

    def test_missing_edge_orientation(self, triangle):
        with pytest.raises(OrientationError, match="no orientation"):
            OrientedDag.from_directions(triangle, [(0, 1), (1, 2)])

    def test_inconsistent_topological_order(self, path3):
        with pytest.raises(OrientationError, match="before tail"):
            OrientedDag(base=path3, direction=((0, 1), (1, 2)), topo_order=(1, 0, 2))

    def test_degree_pair_of_wrongly_oriented_edge(self, path3):
        dag = OrientedDag.from_directions(path3, [(0, 1), (1, 2)])
        assert dag.degree_pair(0, 1) == (1, 1)
        with pytest.raises(OrientationError, match="oriented 1->0"):
            dag.degree_pair(1, 0)
        with pytest.raises(OrientationError, match="not an edge"):
            dag.degree_pair(0, 2)

    def test_reversal_swaps_sources_and_sinks(self, k4):
        dag = bipolar_orientation_dfs(k4, 0, 1)
        flipped = dag.reversed()
        assert flipped.sources == dag.sinks
        assert flipped.sinks == dag.sources
        assert flipped.topo_order == tuple(reversed(dag.topo_order))

    def test_text_format_round_trip(self, petersen):
        dag = bipolar_orientation_dfs(petersen, 0, 1)
        parsed = parse_orientation(format_orientation(dag))
        assert parsed.direction == dag.direction
        assert parsed.topo_order == dag.topo_order

    def test_text_format_errors(self):
        with pytest.raises(OrientationError, match="order"):
            parse_orientation("0 -> 1\n")
        with pytest.raises(OrientationError, match="line 1"):
            parse_orientation("0 => 1\norder: 0 1\n")


class TestBipolar:
    @pytest.mark.parametrize("method", BIPOLAR_METHODS)
    @pytest.mark.parametrize("name", ["k2", "triangle", "k4", "diamond", "petersen"])
    def test_reference_graphs(self, method, name):
        graph = load_named_graph(name)
        s, t = graph.edges[0]
        assert_st_ordering(method(graph, s, t), s, t)

    @pytest.mark.parametrize("method", BIPOLAR_METHODS)
    def test_cycle_orientation(self, method):
        dag = method(cycle_graph(8), 0, 1)
        assert_st_ordering(dag, 0, 1)
        assert longest_path_length(dag) == 7

    @pytest.mark.parametrize("method", BIPOLAR_METHODS)
    def test_terminals_must_be_adjacent(self, method, square):
        with pytest.raises(OrientationError, match="not an edge"):
            method(square, 0, 2)

    @pytest.mark.parametrize("method", BIPOLAR_METHODS)
    def test_terminals_must_differ(self, method, k4):
        with pytest.raises(OrientationError, match="must differ"):
            method(k4, 2, 2)

    @pytest.mark.parametrize("method", BIPOLAR_METHODS)
    def test_requires_biconnected_graph(self, method, bowtie):
        with pytest.raises(GraphError, match="biconnected"):
            method(bowtie, 0, 1)

    @settings(max_examples=30, deadline=None)
    @given(
        n=st.sampled_from([6, 8, 10, 12, 14]),
        seed=st.integers(min_value=0, max_value=10_000),
        use_bfs=st.booleans(),
    )
    def test_random_regular_graphs(self, n, seed, use_bfs):
        graph = generate_random_regular(n, 3, seed=seed)
        if not is_biconnected(graph):
            return
        s, t = graph.edges[seed % graph.m]
        method = bipolar_orientation_bfs if use_bfs else bipolar_orientation_dfs
        assert_st_ordering(method(graph, s, t), s, t)

    def test_breadth_first_variant_on_a_thousand_nodes(self):
        graph = next(
            candidate
            for candidate in (
                generate_random_regular(1000, 3, seed=seed) for seed in range(20)
            )
            if is_biconnected(candidate)
        )
        s, t = graph.edges[0]
        started = time.perf_counter()
        dag = bipolar_orientation_bfs(graph, s, t)
        elapsed = time.perf_counter() - started
        assert_st_ordering(dag, s, t)
        assert elapsed < 5.0

    @settings(max_examples=25, deadline=None)
    @given(
        n=st.sampled_from([4, 6, 8, 10, 12, 16, 20]),
        seed=st.integers(min_value=0, max_value=10_000),
        use_bfs=st.booleans(),
    )
    def test_heads_in_degree_identity_on_3_regular_graphs(self, n, seed, use_bfs):
        graph = generate_random_regular(n, 3, seed=seed)
        if not is_biconnected(graph):
            return
        s, t = graph.edges[0]
        method = bipolar_orientation_bfs if use_bfs else bipolar_orientation_dfs
        dag = method(graph, s, t)
        # One source and one sink
        assert averaged_heads_in_degree(dag) == Fraction(2, 3) + Fraction(8, 3 * n)

    def test_bipolar_k4_heads_in_degree(self, k4):
        dag = bipolar_orientation_dfs(k4, 0, 1)
        assert averaged_heads_in_degree(dag) == Fraction(4, 3)
        assert averaged_tails_out_degree(dag) == Fraction(4, 3)


class TestLightcone:
    def test_path_rooted_at_end(self, path3):
        dag = bfs_lightcone_orientation(path3, 0)
        assert dag.visit_order == (0, 1, 2)
        assert dag.topo_order == (2, 1, 0)
        assert dag.sinks == frozenset({0})

    def test_triangle_orients_toward_root(self, triangle):
        dag = bfs_lightcone_orientation(triangle, 0)
        assert dag.has_directed_edge(1, 0)
        assert dag.has_directed_edge(2, 0)
        assert dag.has_directed_edge(2, 1)

    def test_layer_splits_into_components(self):
        graph = UndirectedGraph.from_edges(4, [(0, 1), (0, 2), (0, 3), (2, 3)])
        dag = bfs_lightcone_orientation(graph, 0)
        # Layer {1, 2, 3} splits into {1} and {2, 3}, the latter rooted at 2
        assert dag.visit_order == (0, 1, 2, 3)
        assert dag.has_directed_edge(3, 2)
        assert dag.sinks == frozenset({0})

    @pytest.mark.parametrize("root", range(10))
    def test_root_is_the_unique_sink(self, petersen, root):
        dag = bfs_lightcone_orientation(petersen, root)
        assert dag.is_acyclic
        assert dag.sinks == frozenset({root})

    def test_rejects_bad_root(self, k4):
        with pytest.raises(OrientationError):
            bfs_lightcone_orientation(k4, 4)

    def test_rejects_disconnected_graph(self):
        disjoint = UndirectedGraph.from_edges(4, [(0, 1), (2, 3)])
        with pytest.raises(GraphError):
            bfs_lightcone_orientation(disjoint, 0)


class TestBlockOrientation:
    def test_bowtie_has_single_source(self, bowtie):
        dag = orient_by_blocks(bowtie, 0)
        assert dag.is_acyclic
        assert dag.sources == frozenset({0})

    def test_tree_edges_point_away_from_root(self):
        star = star_graph(3)
        dag = orient_by_blocks(star, 0)
        assert dag.sources == frozenset({0})
        assert dag.sinks == frozenset({1, 2, 3})

    def test_leaf_root(self):
        dag = orient_by_blocks(path_graph(4), 3)
        assert dag.topo_order == (3, 2, 1, 0)


class TestDegreeStatistics:
    def test_path_statistics(self):
        dag = OrientedDag.from_directions(path_graph(4), [(0, 1), (1, 2), (2, 3)])
        assert averaged_heads_in_degree(dag) == 0
        assert longest_path_length(dag) == 3

    def test_complete_graph_statistics(self):
        graph = complete_graph(5)
        dag = bipolar_orientation_bfs(graph, 0, 1)
        # In-degrees 0..4 along the order
        assert averaged_heads_in_degree(dag) == Fraction(0 + 1 * 2 + 2 * 3 + 3 * 4, 10)

    def test_finite_bounds_enclose_bipolar_3_regular_graphs(self, petersen):
        dag = bipolar_orientation_dfs(petersen, 0, 1)
        lower, upper = heads_in_degree_bounds(3, 10, 1, 1)
        assert lower <= averaged_heads_in_degree(dag) <= upper

    def test_asymptotic_bounds(self):
        assert asymptotic_in_degree_bounds(3) == (Fraction(2, 3), Fraction(2, 3))
        assert asymptotic_in_degree_bounds(4) == (Fraction(1), Fraction(3, 2))

    def test_bounds_need_positive_sizes(self):
        with pytest.raises(OrientationError):
            heads_in_degree_bounds(0, 10, 1, 1)
