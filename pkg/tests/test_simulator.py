import itertools
import math
from dataclasses import replace

import numpy as np
import pytest
from hypothesis import given, settings
from hypothesis import strategies as st

from lightcone.analysis import two_regular_expected_cut, zero_local_edge
from lightcone.ansatz import (
    AnsatzFactory,
    SchemeVariant,
    build_bipolar_zy,
    build_qaoa,
    build_ry,
)
from lightcone.errors import ResourceLimitError
from lightcone.graphs import UndirectedGraph, cycle_graph, load_named_graph
from lightcone.orientation import bipolar_orientation_dfs
from lightcone.simulator import (
    Backend,
    PauliTerm,
    PropagationContext,
    SimulationError,
    TermFilterPipeline,
    TruncationKind,
    TruncationMode,
    WeightFilter,
    expected_cut,
    format_samples,
    half_chain_entropy,
    k_local_subgraph,
    parse_truncation,
    pauli_backpropagate,
    prepare_state,
    propagate_observable,
    sample_bitstrings,
    variance_estimate,
)

PAULI = Backend.PAULI


def zy1(graph, scheme=SchemeVariant.UNIFORM):
    return build_bipolar_zy(bipolar_orientation_dfs(graph, *graph.edges[0]), 1, scheme)


class TestTruncationMode:
    @pytest.mark.parametrize(
        "text, kind, value",
        [
            ("none", TruncationKind.NONE, 0.0),
            ("klocal:1", TruncationKind.KLOCAL, 1),
            ("weight:3", TruncationKind.WEIGHT, 3),
            ("coeff:0.001", TruncationKind.COEFFICIENT, 0.001),
        ],
    )
    def test_parse(self, text, kind, value):
        mode = parse_truncation(text)
        assert mode.kind is kind
        assert mode.value == value
        assert str(mode) == text

    @pytest.mark.parametrize("text", ["weight:0", "klocal:-1", "coeff:0", "depth:2"])
    def test_rejects_bad_modes(self, text):
        with pytest.raises(SimulationError):
            parse_truncation(text)

    def test_backend_names(self):
        assert Backend.from_string("Pauli") is PAULI
        with pytest.raises(SimulationError):
            Backend.from_string("tensor-network")


class TestStatevector:
    def test_initial_state_is_uniform(self, k2):
        state = prepare_state(build_ry(k2), [0.0, 0.0])
        assert np.allclose(state, 0.5)

    @pytest.mark.parametrize("theta", [0.0, 0.3, math.pi / 2, -1.1])
    def test_single_edge_cut(self, k2, theta):
        report = expected_cut(zy1(k2), [theta])
        assert report.expected_cut == pytest.approx(0.5 * (1 + math.sin(theta)))

    def test_angle_count_is_checked(self, k2):
        with pytest.raises(SimulationError, match="Expected 1 angles"):
            expected_cut(zy1(k2), [0.1, 0.2])

    def test_qubit_cap(self, monkeypatch, petersen):
        monkeypatch.setattr("lightcone.config.MAX_QUBITS", 8)
        with pytest.raises(ResourceLimitError):
            expected_cut(zy1(petersen), [0.2])

    def test_statevector_rejects_truncation(self, k2):
        with pytest.raises(SimulationError, match="exact"):
            expected_cut(zy1(k2), [0.1], mode=TruncationMode.klocal(1))

    def test_ratio_needs_c_max(self, k2):
        assert expected_cut(zy1(k2), [math.pi / 2]).ratio is None
        report = expected_cut(zy1(k2), [math.pi / 2], c_max=1)
        assert report.ratio == pytest.approx(1.0)

    def test_triangle_matches_closed_form(self, triangle):
        theta = 0.77
        report = expected_cut(zy1(triangle), [theta])
        s, c = math.sin(theta), math.cos(theta)
        assert report.expected_cut == pytest.approx(
            0.5 * (3 + s + 2 * c * s - 2 * c * s**2)
        )

    @pytest.mark.parametrize("length", [4, 5, 6, 7])
    def test_cycle_matches_closed_form(self, length):
        circuit = zy1(cycle_graph(length), SchemeVariant.HEAD_IN_DEGREE)
        angles = [0.4, 1.1]
        assert expected_cut(circuit, angles).expected_cut == pytest.approx(
            float(two_regular_expected_cut(length, *angles))
        )

    def test_qaoa_on_an_edge(self, k2):
        # <Z Z> = sin(gamma) sin(4 beta) for p = 1 on a single edge
        gamma, beta = 0.9, 0.35
        report = expected_cut(build_qaoa(k2, 1), [gamma, beta])
        expected = 0.5 * (1 - math.sin(gamma) * math.sin(4 * beta))
        assert report.expected_cut == pytest.approx(expected)


class TestPauliBackend:
    @settings(max_examples=15, deadline=None)
    @given(
        name=st.sampled_from(["triangle", "k4", "diamond", "bowtie", "square"]),
        p=st.integers(min_value=1, max_value=2),
        seed=st.integers(min_value=0, max_value=1000),
    )
    def test_agrees_with_statevector(self, name, p, seed):
        graph = load_named_graph(name)
        circuit = AnsatzFactory().create("bipolar-zy", graph, p, "per-gate")
        rng = np.random.default_rng(seed)
        angles = rng.uniform(-np.pi, np.pi, circuit.parameter_count)
        exact = expected_cut(circuit, angles).expected_cut
        assert expected_cut(circuit, angles, PAULI).expected_cut == pytest.approx(exact)

    @pytest.mark.parametrize("kind", ["qaoa", "ry"])
    def test_other_ansatze_agree(self, petersen, kind):
        circuit = AnsatzFactory().create(kind, petersen, 1)
        angles = np.linspace(0.1, 1.3, circuit.parameter_count)
        exact = expected_cut(circuit, angles).expected_cut
        assert expected_cut(circuit, angles, PAULI).expected_cut == pytest.approx(exact)

    def test_threads_do_not_change_the_result(self, petersen):
        circuit = zy1(petersen, SchemeVariant.PER_GATE)
        angles = np.linspace(-1.0, 1.0, circuit.parameter_count)
        single = expected_cut(circuit, angles, PAULI)
        pooled = expected_cut(circuit, angles, PAULI, threads=4)
        assert pooled.per_edge == single.per_edge

    def test_single_edge_heisenberg_picture(self, k2):
        terms = propagate_observable(zy1(k2), [0.6], (0, 1))
        x1 = PauliTerm(letters=((1, "X"),), coefficient=0.0).masks()
        assert terms[x1] == pytest.approx(-math.sin(0.6))
        assert pauli_backpropagate(zy1(k2), [0.6], (0, 1)) == pytest.approx(
            -math.sin(0.6)
        )

    def test_term_cap(self, petersen):
        circuit = AnsatzFactory().create("bipolar-zy", petersen, 3, "per-gate")
        angles = np.full(circuit.parameter_count, 0.7)
        with pytest.raises(ResourceLimitError):
            pauli_backpropagate(circuit, angles, (0, 1), term_cap=4)

    def test_zero_local_truncation(self, k4):
        theta = 0.93
        dag = bipolar_orientation_dfs(k4, 0, 1)
        circuit = build_bipolar_zy(dag, 1)
        report = expected_cut(circuit, [theta], PAULI, TruncationMode.klocal(0))
        for tail, head in dag.direction:
            others = dag.in_degree(head) - 1
            assert report.edge_value(tail, head) == pytest.approx(
                float(zero_local_edge(others, theta))
            )

    def test_wide_region_is_exact(self, petersen):
        circuit = zy1(petersen, SchemeVariant.PER_GATE)
        angles = np.linspace(0.2, 1.4, circuit.parameter_count)
        exact = expected_cut(circuit, angles).expected_cut
        wide = expected_cut(circuit, angles, PAULI, TruncationMode.klocal(10))
        assert wide.expected_cut == pytest.approx(exact)

    @pytest.mark.parametrize("length", range(6, 13))
    def test_weight_cap_drops_the_closing_path(self, length):
        circuit = zy1(cycle_graph(length), SchemeVariant.HEAD_IN_DEGREE)
        angles = [math.pi / 2, math.pi / 4]
        exact = expected_cut(circuit, angles, PAULI).expected_cut
        truncated = expected_cut(circuit, angles, PAULI, TruncationMode.weight(2))
        assert exact == pytest.approx(length - length % 2)
        assert truncated.expected_cut == pytest.approx(length - 0.5)

    def test_coefficient_threshold_is_applied(self, petersen):
        circuit = zy1(petersen, SchemeVariant.PER_GATE)
        angles = np.full(circuit.parameter_count, 0.3)
        loose = expected_cut(circuit, angles, PAULI, TruncationMode.coefficient(0.5))
        exact = expected_cut(circuit, angles).expected_cut
        assert loose.truncation == "coeff:0.5"
        assert loose.expected_cut != pytest.approx(exact)


class TestFilters:
    def test_weight_filter_counts_drops(self):
        context = PropagationContext(terms={(0b1, 0): 1.0, (0b111, 0): 0.5})
        TermFilterPipeline([WeightFilter(2)]).process(context)
        assert context.terms == {(0b1, 0): 1.0}
        assert context.dropped == {"weight": 1}

    def test_disabled_filters_are_skipped(self):
        pipeline = TermFilterPipeline.for_mode(TruncationMode())
        context = PropagationContext(terms={(0b111, 0): 0.5, (0b1, 0): 1e-20})
        pipeline.process(context)
        assert context.terms == {(0b111, 0): 0.5}

    def test_pipeline_follows_the_mode(self):
        pipeline = TermFilterPipeline.for_mode(TruncationMode.weight(1))
        enabled = [type(p).__name__ for p in pipeline.processors if p.is_enabled()]
        assert enabled == ["PruneFilter", "WeightFilter"]
        context = pipeline.process(
            PropagationContext(terms={(0b1, 0): 1.0, (0b11, 0): 0.5})
        )
        assert context.terms == {(0b1, 0): 1.0}

    def test_pauli_term_text(self):
        term = PauliTerm.from_masks(0b011, 0b110, -0.5)
        assert term.letters == ((0, "X"), (1, "Y"), (2, "Z"))
        assert term.weight == 3
        assert str(term) == "-0.5 X0 Y1 Z2"


class TestKLocalRegion:
    def test_zero_local_region_is_the_edge(self, petersen):
        nodes, edges = k_local_subgraph(petersen, (0, 1), 0)
        assert nodes == frozenset({0, 1})
        assert edges == frozenset({(0, 1)})

    def test_one_local_region_on_a_cycle(self):
        nodes, edges = k_local_subgraph(cycle_graph(8), (0, 1), 1)
        assert nodes == frozenset({7, 0, 1, 2})
        assert edges == frozenset({(0, 1), (1, 2), (0, 7)})


class TestSampling:
    def test_samples_of_a_prepared_cut(self, k2):
        samples = sample_bitstrings(zy1(k2), [math.pi / 2], shots=50, seed=3)
        assert len(samples) == 50
        assert {s.bits for s in samples} <= {(0, 1), (1, 0)}
        assert all(s.cut == 1 for s in samples)

    def test_seeded_sampling_is_reproducible(self, triangle):
        circuit = zy1(triangle)
        first = sample_bitstrings(circuit, [0.4], shots=20, seed=9)
        assert first == sample_bitstrings(circuit, [0.4], shots=20, seed=9)

    def test_sample_text(self, k2):
        samples = sample_bitstrings(zy1(k2), [math.pi / 2], shots=2, seed=0)
        for line in format_samples(samples).splitlines():
            bits, cut = line.split()
            assert bits in ("01", "10")
            assert cut == "1"


class TestDiagnostics:
    def test_bell_pair_entropy(self, k2):
        assert half_chain_entropy(zy1(k2), [math.pi / 2], 1) == pytest.approx(1.0)
        assert half_chain_entropy(zy1(k2), [0.0], 1) == pytest.approx(0.0, abs=1e-9)

    def test_entropy_cut_range(self, k2):
        with pytest.raises(SimulationError):
            half_chain_entropy(zy1(k2), [0.1], 3)

    def test_single_edge_variance(self, k2):
        estimate = variance_estimate(zy1(k2), 4000, seed=1)
        assert estimate.variance == pytest.approx(0.125, abs=0.01)
        assert estimate.samples == 4000

    def test_variance_exceeds_its_lower_bound(self, cube):
        circuit = zy1(cube, SchemeVariant.PER_GATE)
        estimate = variance_estimate(circuit, 400, seed=2)
        assert estimate.variance >= 0.09375 - 3 * estimate.standard_error

    def test_variance_needs_two_samples(self, k2):
        with pytest.raises(SimulationError):
            variance_estimate(zy1(k2), 1)


class TestTruncationError:
    @staticmethod
    def total_error(circuit, theta, k):
        exact = expected_cut(circuit, [theta])
        local = expected_cut(circuit, [theta], PAULI, TruncationMode.klocal(k))
        return sum(
            abs(local.edge_value(*edge) - exact.edge_value(*edge))
            for edge, _ in exact.per_edge
        )

    @pytest.mark.parametrize("k", [0, 1, 2])
    def test_error_shrinks_with_the_odd_power_of_the_angle(self, petersen, k):
        circuit = zy1(petersen)
        theta = 0.1
        wide = self.total_error(circuit, theta, k)
        narrow = self.total_error(circuit, theta / 2, k)
        ratio = (math.sin(theta / 2) / math.sin(theta)) ** (2 * k + 1)
        assert narrow <= 1.1 * ratio * wide + 1e-12

    def test_one_local_beats_zero_local(self, petersen):
        circuit = zy1(petersen)
        assert self.total_error(circuit, 0.4, 1) < self.total_error(circuit, 0.4, 0)

    @settings(max_examples=20, deadline=None)
    @given(
        n=st.integers(min_value=2, max_value=9),
        seed=st.integers(min_value=0, max_value=10_000),
    )
    def test_zero_local_is_exact_on_trees(self, n, seed):
        rng = np.random.default_rng(seed)
        tree = UndirectedGraph.from_edges(
            n, [(int(rng.integers(node)), node) for node in range(1, n)]
        )
        circuit = AnsatzFactory().create("bipolar-zy", tree, 1, "per-gate")
        angles = rng.uniform(-np.pi, np.pi, circuit.parameter_count)
        exact = expected_cut(circuit, angles)
        local = expected_cut(circuit, angles, PAULI, TruncationMode.klocal(0))
        for (edge, value), (_, truncated) in zip(exact.per_edge, local.per_edge):
            assert truncated == pytest.approx(value, abs=1e-9), edge


class TestCircuitInvariants:
    @pytest.mark.parametrize("kind", ["bipolar-zy", "lightcone-zy", "qaoa", "ry"])
    @pytest.mark.parametrize("p", [1, 2])
    def test_state_stays_normalised(self, petersen, kind, p):
        circuit = AnsatzFactory().create(kind, petersen, p, "per-gate")
        angles = np.linspace(-1.2, 2.3, circuit.parameter_count)
        norm = np.linalg.norm(prepare_state(circuit, angles))
        assert abs(norm - 1.0) < 1e-12

    @settings(max_examples=15, deadline=None)
    @given(
        name=st.sampled_from(["k4", "diamond", "petersen", "c8"]),
        p=st.integers(min_value=1, max_value=2),
        seed=st.integers(min_value=0, max_value=10_000),
    )
    def test_gates_into_one_head_commute(self, name, p, seed):
        graph = load_named_graph(name)
        circuit = AnsatzFactory().create("bipolar-zy", graph, p, "per-gate")
        rng = np.random.default_rng(seed)
        shuffled = []
        for _, group in itertools.groupby(circuit.gates, key=lambda g: g.target):
            group = list(group)
            shuffled.extend(group[i] for i in rng.permutation(len(group)))
        permuted = replace(
            circuit,
            gates=tuple(shuffled),
            scheme=replace(
                circuit.scheme, binding=tuple(gate.param for gate in shuffled)
            ),
        )
        angles = rng.uniform(-np.pi, np.pi, circuit.parameter_count)
        before = expected_cut(circuit, angles)
        after = expected_cut(permuted, angles)
        for edge, value in before.per_edge:
            assert abs(after.edge_value(*edge) - value) < 1e-12
