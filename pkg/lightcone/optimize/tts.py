"""Multi-start time-to-solution harness and exponential scaling fits."""

from __future__ import annotations

import logging
import math
import time
from concurrent.futures import ThreadPoolExecutor
from dataclasses import dataclass
from typing import Any, Dict, List, Optional, Sequence, Tuple

import numpy as np

from ..ansatz import AnsatzCircuit, AnsatzFactory
from ..graphs import UndirectedGraph, generate_random_regular
from ..oracle import CutAssignment, brute_force_maxcut
from ..seeding import substream
from ..simulator import expected_cut, most_probable_bitstring
from .config import OptimizationError, OptimizerConfig
from .maximize import maximize_cut

logger = logging.getLogger(__name__)

SMALL_INIT_SCALE = 0.01


@dataclass(frozen=True, slots=True)
class TTSRecord:
    """Outcome of the restarts spent on one graph.

    ``iterations`` sums objective evaluations over every restart used, the
    successful one included.
    """

    graph_id: str
    scheme: str
    n: int
    restarts: int
    iterations: int
    success: bool
    c_max: int
    best_cut: float
    wall_time: float
    traces: Tuple[Tuple[float, ...], ...]
    best_assignment: Optional[CutAssignment] = None

    def to_dict(self, include_traces: bool = False) -> Dict[str, Any]:
        """JSON payload; wall time is left out so reruns compare equal."""
        payload: Dict[str, Any] = {
            "graph_id": self.graph_id,
            "scheme": self.scheme,
            "n": self.n,
            "restarts": self.restarts,
            "iterations": self.iterations,
            "success": self.success,
            "c_max": self.c_max,
            "best_cut": self.best_cut,
            "best_bits": (
                None
                if self.best_assignment is None
                else "".join(str(b) for b in self.best_assignment.bits)
            ),
        }
        if include_traces:
            payload["traces"] = [list(trace) for trace in self.traces]
        return payload


@dataclass(frozen=True, slots=True)
class ScalingFit:
    """Least-squares fit of ``a * b**N`` on log values."""

    a: float
    b: float
    residual: float


def initial_angles(
    settings: OptimizerConfig, count: int, rng: np.random.Generator
) -> np.ndarray:
    if settings.init == "small":
        return rng.uniform(0.0, SMALL_INIT_SCALE, size=count)
    return rng.uniform(-math.pi, math.pi, size=count)


def multistart_tts(
    graph: UndirectedGraph,
    circuit: AnsatzCircuit,
    settings: OptimizerConfig,
    c_max: int,
    seed: int = 0,
    graph_id: str = "g0",
    graph_index: int = 0,
) -> TTSRecord:
    """Restart from fresh random angles until the optimum is reached.

    A restart succeeds when its optimised expected cut is within
    ``settings.success_tolerance`` of ``c_max``. Running out of restarts is
    recorded as a failure.
    """
    start = time.perf_counter()
    target = c_max - settings.success_tolerance
    traces: List[Tuple[float, ...]] = []
    total = 0
    best_cut = -math.inf
    best_angles: Optional[Sequence[float]] = None
    success = False

    for restart in range(settings.restart_cap):
        rng = substream(seed, "init-angles", graph_index, restart)
        result = maximize_cut(
            circuit,
            settings,
            initial_angles(settings, circuit.parameter_count, rng),
            c_max=target,
        )
        total += result.iterations
        traces.append(result.trace)
        value = result.best_value
        if settings.objective == "cvar":
            value = expected_cut(circuit, result.angles).expected_cut
        if value > best_cut:
            best_cut, best_angles = value, result.angles
        logger.debug(
            "%s restart %d: %d evaluations, cut %.6f",
            graph_id,
            restart,
            result.iterations,
            value,
        )
        if value >= target:
            success = True
            break
    else:
        logger.warning(
            "%s: optimum %d not reached within %d restarts",
            graph_id,
            c_max,
            settings.restart_cap,
        )

    assert best_angles is not None
    return TTSRecord(
        graph_id=graph_id,
        scheme=circuit.scheme.variant.value if circuit.kind != "ry" else "ry",
        n=graph.n,
        restarts=len(traces),
        iterations=total,
        success=success,
        c_max=c_max,
        best_cut=best_cut,
        wall_time=time.perf_counter() - start,
        traces=tuple(traces),
        best_assignment=most_probable_bitstring(circuit, best_angles),
    )


def run_tts_ensemble(
    n: int,
    graphs: int,
    ansatz: str,
    scheme: str,
    settings: OptimizerConfig,
    seed: int = 0,
    threads: int = 1,
    degree: int = 3,
) -> List[TTSRecord]:
    """TTS records for ``graphs`` random ``degree``-regular graphs on ``n`` nodes.

    Graph ``k`` comes from its own substream, so the ensemble for a given
    seed is the same whatever the thread count; records are returned in
    graph order.

    Raises:
        OptimizationError: If ``graphs`` is not positive
    """
    if graphs < 1:
        raise OptimizationError(f"Need at least one graph, got {graphs}")

    factory = AnsatzFactory()

    def job(index: int) -> TTSRecord:
        rng = substream(seed, "graph-gen", n, index)
        graph = generate_random_regular(n, degree, seed=rng)
        circuit = factory.create(ansatz, graph, p=1, scheme=scheme)
        c_max = brute_force_maxcut(graph).cut
        return multistart_tts(
            graph,
            circuit,
            settings,
            c_max,
            seed=seed,
            graph_id=f"n{n}-g{index}",
            graph_index=index,
        )

    if threads > 1:
        with ThreadPoolExecutor(max_workers=threads) as pool:
            records = list(pool.map(job, range(graphs)))
    else:
        records = [job(index) for index in range(graphs)]

    failures = sum(not record.success for record in records)
    if failures:
        logger.warning(
            "%d of %d graphs at N=%d never reached the optimum", failures, graphs, n
        )
    return records


def summarize_tts(
    records: Sequence[TTSRecord],
) -> List[Tuple[int, float, float, float]]:
    """Rows (N, median, q25, q75) of iterations, sorted by N."""
    by_size: Dict[int, List[int]] = {}
    for record in records:
        by_size.setdefault(record.n, []).append(record.iterations)
    rows = []
    for n in sorted(by_size):
        values = np.asarray(by_size[n], dtype=float)
        q25, median, q75 = np.percentile(values, [25, 50, 75])
        rows.append((n, float(median), float(q25), float(q75)))
    return rows


def scaling_fit(points: Sequence[Tuple[float, float]]) -> ScalingFit:
    """Fit ``value = a * b**N`` by least squares on ``log(value)``.

    Raises:
        OptimizationError: For fewer than 3 points or a nonpositive value
    """
    if len(points) < 3:
        raise OptimizationError(
            f"A scaling fit needs at least 3 points, got {len(points)}"
        )
    sizes = np.array([float(n) for n, _ in points])
    values = np.array([float(v) for _, v in points])
    if np.any(values <= 0):
        raise OptimizationError(
            f"Scaling fit needs positive values, got {values.min()}"
        )

    design = np.column_stack([np.ones_like(sizes), sizes])
    logs = np.log(values)
    (log_a, log_b), *_ = np.linalg.lstsq(design, logs, rcond=None)
    residual = float(np.sum((design @ np.array([log_a, log_b]) - logs) ** 2))
    return ScalingFit(a=float(np.exp(log_a)), b=float(np.exp(log_b)), residual=residual)
