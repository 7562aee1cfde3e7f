import math

import numpy as np
import pytest

from lightcone.analysis import (
    BOUNDS,
    AnalysisError,
    BoundOptions,
    angle_relaxed_bound_3regular,
    compute_bound,
    cut_fraction_objective,
    cycle_contribution,
    d_regular_zy1_bound,
    maximize_angles,
    one_local_minmax_3regular,
    one_local_objective,
    single_term_bound,
    theorem1_bound,
    theorem1_bound_finite,
    theorem1_ratios,
    theorem2_bound,
    theta_grid,
    theta_sweep,
    tree_objective,
    two_regular_expected_cut,
    zero_local_edge,
    zero_local_edge_p2,
    zy2_bound_3regular,
    zy2_objective,
)
from lightcone.ansatz import AnsatzFactory
from lightcone.graphs import generate_random_regular, is_biconnected
from lightcone.oracle import brute_force_maxcut
from lightcone.simulator import expected_cut


class TestFormulas:
    def test_zero_local_edge(self):
        assert float(zero_local_edge(1, 0.93)) == pytest.approx(-0.4792, abs=1e-4)
        assert float(zero_local_edge(0, math.pi / 2)) == pytest.approx(-1.0)

    def test_zero_local_edge_rejects_negative_k(self):
        with pytest.raises(AnalysisError):
            zero_local_edge(-1, 0.5)

    def test_second_round_off_reduces_to_one_round(self):
        for in_degree in (1, 2, 3):
            value = zero_local_edge_p2(2, in_degree, 3, 0.8, 0.0)
            assert float(value) == pytest.approx(
                float(zero_local_edge(in_degree - 1, 0.8))
            )

    def test_second_round_degree_range(self):
        with pytest.raises(AnalysisError):
            zero_local_edge_p2(1, 4, 3, 0.3, 0.3)

    def test_cycle_contribution(self):
        value = cycle_contribution(3, 1, math.pi / 4)
        assert float(value) == pytest.approx(-0.35355, abs=1e-5)
        assert float(cycle_contribution(5, 2, 0.4, single_source_sink=False)) == 0

    @pytest.mark.parametrize("length, expected", [(4, 4.0), (5, 4.0), (8, 8.0)])
    def test_relaxed_cycle_reaches_the_maximum_cut(self, length, expected):
        value = two_regular_expected_cut(length, math.pi / 2, math.pi / 4)
        assert float(value) == pytest.approx(expected)

    def test_tree_objective_is_the_two_thirds_fraction(self):
        grid = theta_grid(50)
        assert np.allclose(tree_objective(grid), cut_fraction_objective(2 / 3, grid))

    def test_one_local_without_cycles_is_the_tree_objective(self):
        grid = theta_grid(50)
        values = one_local_objective(0.0, 0.0, 0.0, grid)
        assert np.allclose(values, tree_objective(grid))


class TestMaximize:
    def test_grid_contains_key_angles(self):
        grid = theta_grid()
        assert grid[0] == 0.0
        assert grid[-1] == pytest.approx(math.pi / 2)
        assert np.any(np.isclose(grid, math.pi / 4))

    def test_boundary_maximum(self):
        value, (theta,) = maximize_angles(np.sin)
        assert value == pytest.approx(1.0)
        assert theta == pytest.approx(math.pi / 2)

    def test_interior_maximum_is_refined(self):
        value, (theta,) = maximize_angles(lambda t: -((t - 0.5) ** 2), points=11)
        assert theta == pytest.approx(0.5, abs=1e-6)
        assert value == pytest.approx(0.0, abs=1e-10)

    def test_two_dimensional(self):
        value, angles = maximize_angles(lambda a, b: np.sin(a) * np.sin(2 * b), dims=2)
        assert value == pytest.approx(1.0)
        assert angles == pytest.approx((math.pi / 2, math.pi / 4), abs=1e-5)


class TestGuarantees:
    def test_zero_local_zy1(self):
        bound = theorem1_bound()
        assert bound.alpha == pytest.approx(0.7934, abs=5e-4)
        assert bound.angles[0] == pytest.approx(0.93, abs=0.01)

    def test_more_sources_lower_the_bound(self):
        assert theorem1_bound(0.2).alpha < theorem1_bound(0.0).alpha

    def test_source_fraction_range(self):
        with pytest.raises(AnalysisError):
            theorem1_bound(1.5)

    def test_finite_ratios_sum_to_one(self):
        assert sum(theorem1_ratios(100, 1, 1)) == pytest.approx(1.0)
        with pytest.raises(AnalysisError):
            theorem1_ratios(10, 0, 1)

    def test_finite_bound_approaches_the_limit(self):
        limit = theorem1_bound().alpha
        assert theorem1_bound_finite(10_000, 1, 1).alpha == pytest.approx(
            limit, abs=1e-3
        )

    def test_single_qaoa_term(self):
        bound = single_term_bound(2)
        assert bound.alpha == pytest.approx(0.6925, abs=5e-4)
        assert bound.alpha == pytest.approx(0.5 * (1 + 2 / (3 * math.sqrt(3))))

    def test_d_regular_matches_three_regular_case(self):
        assert d_regular_zy1_bound(3).alpha == pytest.approx(theorem1_bound().alpha)
        with pytest.raises(AnalysisError):
            d_regular_zy1_bound(1)

    def test_regular_bound_does_not_grow_with_degree(self):
        alphas = [d_regular_zy1_bound(degree).alpha for degree in range(3, 11)]
        for lower, higher in zip(alphas, alphas[1:]):
            assert higher <= lower + 1e-9

    @pytest.mark.slow
    def test_small_regular_graphs_beat_the_two_cycle_bound(self):
        factory = AnsatzFactory()
        thetas = np.linspace(0.0, math.pi, 361)
        checked = 0
        for seed in range(40):
            graph = generate_random_regular(8 + 2 * (seed % 3), 3, seed=seed)
            if not is_biconnected(graph):
                continue
            circuit = factory.create("bipolar-zy", graph, 1, "uniform")
            best = max(expected_cut(circuit, [t]).expected_cut for t in thetas)
            assert best / brute_force_maxcut(graph).cut >= 0.7926
            checked += 1
            if checked == 12:
                break
        assert checked == 12

    def test_angle_relaxed(self):
        bound = angle_relaxed_bound_3regular()
        assert bound.alpha == pytest.approx(5 / 6)
        assert bound.angles == pytest.approx((math.pi / 2, math.pi / 4), abs=1e-5)

    def test_two_cycle_worst_case(self):
        bound = theorem2_bound()
        assert bound.alpha == pytest.approx(0.7926, abs=5e-4)
        assert (bound.witness["k1"], bound.witness["k2"]) == (4, 7)
        assert bound.witness["cycle_lengths"] == [11, 17]

    def test_two_cycle_search_range(self):
        with pytest.raises(AnalysisError, match="at least 8"):
            theorem2_bound(3)

    def test_one_local_minmax_does_not_exceed_tree_bound(self):
        bound = one_local_minmax_3regular(step=1 / 20)
        assert 0.5 < bound.alpha <= theorem1_bound().alpha + 1e-4
        assert set(bound.witness) == {"r_up", "r_down", "r_square"}

    @pytest.mark.slow
    def test_second_round_minmax(self):
        bound = zy2_bound_3regular()
        ratios = [bound.witness["r"][key] for key in ("00", "01", "10", "11")]
        assert sum(ratios) == pytest.approx(1.0, abs=1e-6)
        assert ratios[1] + ratios[3] <= 2 / 3 + 1e-6
        assert ratios[2] + ratios[3] <= 2 / 3 + 1e-6
        assert bound.alpha == pytest.approx(0.8025, abs=1e-3)
        assert bound.alpha == pytest.approx(
            float(zy2_objective(3, ratios, *bound.angles))
        )


class TestBoundRegistry:
    def test_registry_names(self):
        assert set(BOUNDS) == {
            "zy1-0local",
            "qaoa1-term",
            "dregular",
            "zy2-0local",
            "zy1-1local",
            "theorem2",
            "angle-relaxed",
        }

    def test_compute_bound_passes_options(self):
        bound = compute_bound("dregular", BoundOptions(degree=4))
        assert bound.witness == {"degree": 4}

    def test_unknown_bound(self):
        with pytest.raises(AnalysisError, match="Unknown bound"):
            compute_bound("zy3")

    def test_to_dict(self):
        data = compute_bound("angle-relaxed").to_dict()
        assert data["method"] == "angle-relaxed"
        assert len(data["angles"]) == 2

    def test_sweep_peaks_at_the_bound(self):
        bound = theorem1_bound()
        rows = theta_sweep(bound, points=181)
        assert len(rows) == 181
        assert max(value for _, value in rows) <= bound.alpha + 1e-12
        assert max(value for _, value in rows) == pytest.approx(bound.alpha, abs=1e-4)

    def test_sweep_of_two_angle_bound(self):
        rows = theta_sweep(angle_relaxed_bound_3regular(), points=5)
        assert rows[-1][1] == pytest.approx(5 / 6)
