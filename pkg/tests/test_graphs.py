import math

import pytest
from hypothesis import given, settings
from hypothesis import strategies as st

from lightcone.errors import ResourceLimitError
from lightcone.graphs import (
    GraphError,
    GraphParseError,
    UndirectedGraph,
    biconnected_components,
    combine_block_solutions,
    connected_component_count,
    count_simple_cycles,
    cycle_graph,
    cycle_space_dimension,
    format_edge_list,
    generate_random_connected,
    generate_random_regular,
    girth,
    is_biconnected,
    is_connected,
    load_graph,
    load_named_graph,
    load_named_graphs,
    parse_edge_list,
    path_graph,
    petersen_graph,
    require_connected,
    star_graph,
)
from lightcone.oracle import brute_force_maxcut, cut_value


class TestUndirectedGraph:
    def test_rejects_self_loop(self):
        with pytest.raises(GraphError, match="Self-loop"):
            UndirectedGraph.from_edges(2, [(1, 1)])

    def test_rejects_duplicate_in_either_direction(self):
        with pytest.raises(GraphError, match="Duplicate"):
            UndirectedGraph.from_edges(2, [(0, 1), (1, 0)])

    def test_rejects_out_of_range_node(self):
        with pytest.raises(GraphError):
            UndirectedGraph.from_edges(2, [(0, 2)])

    def test_neighbors_are_sorted(self, k4):
        assert k4.neighbors(2) == (0, 1, 3)
        assert k4.regular_degree() == 3

    def test_edge_position_ignores_endpoint_order(self, triangle):
        assert triangle.edge_position(2, 0) == triangle.edge_position(0, 2)
        with pytest.raises(GraphError):
            path_graph(3).edge_position(0, 2)

    def test_induced_subgraph_relabels(self, k4):
        sub, mapping = k4.induced([3, 1])
        assert sub.n == 2
        assert sub.edges == ((0, 1),)
        assert mapping == (1, 3)

    def test_irregular_graph_has_no_common_degree(self):
        assert star_graph(3).regular_degree() is None


class TestEdgeListParser:
    def test_without_header_node_count_is_max_id_plus_one(self):
        graph = parse_edge_list("0 1\n1 2\n")
        assert graph.n == 3
        assert graph.edges == ((0, 1), (1, 2))

    def test_header_declares_isolated_nodes(self):
        graph = parse_edge_list("4 1\n0 1\n")
        assert graph.n == 4
        assert graph.m == 1

    def test_comments_and_blank_lines_are_skipped(self):
        text = "# a path\n\n0 1  # first\n1 2\n"
        assert parse_edge_list(text).m == 2

    def test_reports_every_bad_line(self):
        with pytest.raises(GraphParseError) as info:
            parse_edge_list("0 1\n1 1\n0 1\nx y\n")
        errors = info.value.errors
        assert len(errors) == 3
        assert errors[0].startswith("line 2")
        assert "duplicate" in errors[1]
        assert "line 4" in errors[2]

    def test_node_beyond_declared_count(self):
        with pytest.raises(GraphParseError, match="declared node count"):
            parse_edge_list("2 1\n0 5\n")

    def test_wrong_field_count(self):
        with pytest.raises(GraphParseError, match="two fields"):
            parse_edge_list("0 1 2\n")

    def test_relabel_keeps_names(self):
        graph = parse_edge_list("a b\nb c\n", relabel=True)
        assert graph.n == 3
        assert graph.labels == ("a", "b", "c")
        assert format_edge_list(graph) == "3 2\na b\nb c\n"

    def test_formatted_list_parses_back(self, petersen):
        assert parse_edge_list(format_edge_list(petersen)) == petersen

    def test_lone_header_declares_an_edgeless_graph(self):
        assert parse_edge_list("1 0\n") == UndirectedGraph(n=1, edges=())
        assert parse_edge_list("0 0\n") == UndirectedGraph(n=0, edges=())
        assert parse_edge_list("3 0\n").n == 3

    @settings(max_examples=60, deadline=None)
    @given(data=st.data(), n=st.integers(min_value=0, max_value=7))
    def test_small_and_sparse_graphs_parse_back(self, data, n):
        pairs = [(i, j) for i in range(n) for j in range(i + 1, n)]
        chosen = (
            data.draw(st.lists(st.sampled_from(pairs), unique=True)) if pairs else []
        )
        edges = tuple(
            (j, i) if data.draw(st.booleans()) else (i, j) for i, j in chosen
        )
        graph = UndirectedGraph(n=n, edges=edges)
        assert parse_edge_list(format_edge_list(graph)) == graph


class TestLoader:
    def test_missing_file(self, tmp_path):
        with pytest.raises(FileNotFoundError):
            load_graph(tmp_path / "absent.txt")

    def test_file_errors_carry_the_path(self, tmp_path):
        path = tmp_path / "bad.txt"
        path.write_text("1 1\n")
        with pytest.raises(GraphParseError, match="bad.txt"):
            load_graph(path)

    def test_reference_library(self):
        library = load_named_graphs()
        assert {"k2", "triangle", "k4", "petersen", "square"} <= set(library.graphs)
        assert library.descriptions["k4"]
        assert load_named_graph("petersen").regular_degree() == 3

    def test_unknown_reference_graph(self):
        with pytest.raises(GraphError, match="Unknown reference graph"):
            load_named_graph("dodecahedron")


class TestGenerators:
    def test_same_seed_same_graph(self):
        assert generate_random_regular(12, 3, seed=4) == generate_random_regular(
            12, 3, seed=4
        )

    def test_odd_degree_sum(self):
        with pytest.raises(GraphError, match="odd"):
            generate_random_regular(5, 3, seed=0)

    def test_degree_must_be_below_node_count(self):
        with pytest.raises(GraphError):
            generate_random_regular(4, 4, seed=0)

    @settings(max_examples=25, deadline=None)
    @given(
        n=st.integers(min_value=4, max_value=16),
        d=st.integers(min_value=0, max_value=3),
        seed=st.integers(min_value=0, max_value=2**16),
    )
    def test_regular_graphs_are_simple_and_regular(self, n, d, seed):
        if (n * d) % 2:
            return
        graph = generate_random_regular(n, d, seed=seed)
        assert graph.n == n
        assert graph.regular_degree() == d
        assert graph.m == n * d // 2

    def test_petersen_constructor(self):
        graph = petersen_graph()
        assert graph.m == 15
        assert graph.regular_degree() == 3
        assert girth(graph) == 5

    def test_random_connected(self):
        graph = generate_random_connected(10, 0.5, seed=1)
        assert is_connected(graph)

    def test_connected_sampling_can_exhaust_its_cap(self, monkeypatch):
        monkeypatch.setattr("lightcone.config.REGULAR_RETRY_CAP", 1)
        with pytest.raises(ResourceLimitError):
            generate_random_connected(30, 0.01, seed=0)


class TestDecomposition:
    def test_connectivity(self, k4):
        disjoint = UndirectedGraph.from_edges(4, [(0, 1), (2, 3)])
        assert connected_component_count(disjoint) == 2
        with pytest.raises(GraphError, match="2 connected components"):
            require_connected(disjoint)
        require_connected(k4)

    def test_biconnectivity(self, k2, k4, path3, bowtie):
        assert is_biconnected(k2)
        assert is_biconnected(k4)
        assert not is_biconnected(path3)
        assert not is_biconnected(bowtie)

    def test_bowtie_blocks(self, bowtie):
        decomposition = biconnected_components(bowtie)
        assert decomposition.bridges == ()
        assert decomposition.blocks == (frozenset({0, 1, 2}), frozenset({2, 3, 4}))
        assert decomposition.articulation_nodes == frozenset({2})
        assert decomposition.block_cut_tree == ((0, 2), (1, 2))

    def test_path_is_all_bridges(self, path3):
        decomposition = biconnected_components(path3)
        assert decomposition.bridges == ((0, 1), (1, 2))
        assert decomposition.blocks == ()
        assert decomposition.component_count == 2

    def test_combined_blocks_keep_their_cuts(self, bowtie):
        decomposition = biconnected_components(bowtie)
        bits = combine_block_solutions(
            bowtie, decomposition, [{0: 0, 1: 1, 2: 1}, {2: 0, 3: 1, 4: 1}]
        )
        assert bits[2] == 1
        assert cut_value(bowtie, bits) == 4

    def test_bridges_are_always_cut(self):
        star = star_graph(4)
        bits = combine_block_solutions(star, biconnected_components(star), [])
        assert cut_value(star, bits) == 4

    @settings(max_examples=30, deadline=None)
    @given(
        n=st.integers(min_value=2, max_value=12),
        p=st.sampled_from([0.2, 0.3, 0.45]),
        seed=st.integers(min_value=0, max_value=10_000),
    )
    def test_block_optima_combine_to_the_maximum_cut(self, n, p, seed):
        graph = generate_random_connected(n, p, seed=seed)
        decomposition = biconnected_components(graph)
        per_block = []
        for block in decomposition.blocks:
            sub, nodes = graph.induced(sorted(block))
            per_block.append(dict(zip(nodes, brute_force_maxcut(sub).bits)))
        bits = combine_block_solutions(graph, decomposition, per_block)
        assert cut_value(graph, bits) == brute_force_maxcut(graph).cut

    def test_missing_block_assignment(self, bowtie):
        with pytest.raises(GraphError, match="missing nodes"):
            combine_block_solutions(
                bowtie, biconnected_components(bowtie), [{0: 0, 1: 1}, {}]
            )


class TestCycles:
    def test_k4_has_seven_cycles(self, k4):
        count = count_simple_cycles(k4)
        assert count.count == 7
        assert not count.exceeded

    def test_cap_is_reported_not_raised(self, k4):
        count = count_simple_cycles(k4, cap=3)
        assert count.exceeded
        assert str(count) == ">=3"

    def test_cycle_space_dimension(self, k4, petersen):
        assert cycle_space_dimension(k4) == 3
        assert cycle_space_dimension(petersen) == 6
        assert cycle_space_dimension(path_graph(5)) == 0

    def test_girth(self, petersen):
        assert girth(petersen) == 5
        assert girth(cycle_graph(7)) == 7
        assert math.isinf(girth(path_graph(4)))
