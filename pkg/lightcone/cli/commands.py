"""Subcommand implementations.

Each command reads its parsed arguments, does the work through the library
and hands payloads to the ``OutputWriter``.
"""

from __future__ import annotations

import argparse
import json
import logging
import math
from pathlib import Path
from typing import Callable, Dict, List, Optional, Sequence

import numpy as np

from .. import config
from ..analysis import BoundOptions, compute_bound, theta_sweep
from ..ansatz import (
    AnsatzCircuit,
    AnsatzFactory,
    circuit_from_json,
    circuit_to_dict,
    two_qubit_depth,
    variance_lower_bound,
)
from ..graphs import (
    UndirectedGraph,
    biconnected_components,
    count_simple_cycles,
    cycle_space_dimension,
    girth,
    is_biconnected,
    is_connected,
    load_graph,
    load_named_graph,
)
from ..optimize import (
    OptimizerConfig,
    initial_angles,
    maximize_cut,
    run_tts_ensemble,
    scaling_fit,
    summarize_tts,
)
from ..oracle import (
    bits_to_string,
    brute_force_maxcut,
    postprocess_samples,
    string_to_bits,
)
from ..orientation import (
    OrientedDag,
    averaged_heads_in_degree,
    averaged_tails_out_degree,
    bfs_lightcone_orientation,
    bipolar_orientation_bfs,
    bipolar_orientation_dfs,
    format_orientation,
    longest_path_length,
    orient_by_blocks,
    validate_bipolar,
)
from ..seeding import substream
from ..simulator import (
    Backend,
    expected_cut,
    format_samples,
    half_chain_entropy,
    most_probable_bitstring,
    parse_truncation,
    sample_bitstrings,
    variance_estimate,
)
from .output import OutputWriter
from .settings import UsageError

logger = logging.getLogger(__name__)

Command = Callable[[argparse.Namespace, OutputWriter], None]

ORIENT_METHODS = ("dfs", "bfs", "lightcone", "blocks")
SAMPLES_FILENAME = "samples.txt"


def input_graph(args: argparse.Namespace, output: OutputWriter) -> UndirectedGraph:
    if args.graph is not None:
        output.manifest.inputs.append(str(args.graph))
        return load_graph(args.graph, relabel=args.relabel)
    if args.named is not None:
        return load_named_graph(args.named)
    raise UsageError("Give a graph with --graph FILE or --named NAME")


def input_circuit(args: argparse.Namespace, output: OutputWriter) -> AnsatzCircuit:
    if getattr(args, "circuit", None) is not None:
        path = Path(args.circuit)
        output.manifest.inputs.append(str(path))
        if not path.exists():
            raise FileNotFoundError(f"Circuit file not found: {path}")
        return circuit_from_json(path.read_text())
    graph = input_graph(args, output)
    return AnsatzFactory().create(
        args.ansatz,
        graph,
        p=args.p,
        scheme=args.scheme,
        root=args.root,
        sink=args.sink,
        orientation=args.orientation,
    )


def input_angles(args: argparse.Namespace, count: int) -> np.ndarray:
    """Angles from ``--angles a,b,...`` or one ``--theta`` for every parameter."""
    angles = optional_angles(args, count)
    if angles is None:
        raise UsageError(f"Give angles with --theta or --angles ({count} parameters)")
    return angles


def optional_angles(args: argparse.Namespace, count: int) -> Optional[np.ndarray]:
    if args.angles is not None:
        try:
            values = [float(token) for token in args.angles.split(",") if token.strip()]
        except ValueError as exc:
            raise UsageError(
                f"--angles must be comma-separated numbers: {exc}"
            ) from exc
        if len(values) != count:
            raise UsageError(f"--angles needs {count} values, got {len(values)}")
        return np.array(values)
    if args.theta is not None:
        return np.full(count, args.theta)
    return None


def required_c_max(args: argparse.Namespace, graph: UndirectedGraph) -> int:
    """``--c-max`` when given, else brute force whatever the graph size."""
    if args.c_max is not None:
        return int(args.c_max)
    return brute_force_maxcut(graph, threads=args.threads).cut


def resolve_c_max(args: argparse.Namespace, graph: UndirectedGraph) -> Optional[int]:
    """``--c-max`` when given, else brute force when the graph is small enough."""
    if args.c_max is None and graph.n > config.ORACLE_MAX_NODES:
        logger.warning("No --c-max and %d nodes exceed the oracle cap", graph.n)
        return None
    return required_c_max(args, graph)


def optimizer_settings(args: argparse.Namespace) -> OptimizerConfig:
    return OptimizerConfig(
        method=args.optimizer,
        max_iterations=args.max_iterations,
        tolerance=args.tolerance,
        init=args.init,
        objective=args.objective,
        confidence=args.confidence,
        shots=args.shots,
        restart_cap=args.restart_cap,
        seed=args.seed,
    )


def orient_command(args: argparse.Namespace, output: OutputWriter) -> None:
    graph = input_graph(args, output)
    source = args.root if args.root is not None else 0
    dag: OrientedDag
    if args.method == "lightcone":
        dag = bfs_lightcone_orientation(graph, source)
    elif args.method == "blocks":
        dag = orient_by_blocks(graph, source)
    else:
        neighbors = graph.neighbors(source) if 0 <= source < graph.n else ()
        sink = args.sink if args.sink is not None else min(neighbors, default=source)
        if args.method == "bfs":
            dag = bipolar_orientation_bfs(graph, source, sink)
        else:
            dag = bipolar_orientation_dfs(graph, source, sink)

    report = validate_bipolar(dag)
    heads = averaged_heads_in_degree(dag)
    tails = averaged_tails_out_degree(dag)
    payload = {
        "method": args.method,
        "n": graph.n,
        "edges": [list(edge) for edge in dag.direction],
        "topo_order": None if dag.topo_order is None else list(dag.topo_order),
        "visit_order": None if dag.visit_order is None else list(dag.visit_order),
        "acyclic": report.acyclic,
        "bipolar": report.is_bipolar,
        "n_plus": report.n_plus,
        "n_minus": report.n_minus,
        "averaged_heads_in_degree": str(heads),
        "averaged_tails_out_degree": str(tails),
        "longest_path": longest_path_length(dag) if dag.is_acyclic else None,
    }
    output.emit_json(payload, "orientation.json")
    output.save("orientation.txt", format_orientation(dag))


def ansatz_command(args: argparse.Namespace, output: OutputWriter) -> None:
    circuit = input_circuit(args, output)
    payload = circuit_to_dict(circuit)
    payload["metrics"] = {
        "parameter_count": circuit.parameter_count,
        "two_qubit_gates": len(circuit.two_qubit_gates()),
        "two_qubit_depth": two_qubit_depth(circuit),
    }
    output.emit_json(payload, "circuit.json")


def simulate_command(args: argparse.Namespace, output: OutputWriter) -> None:
    circuit = input_circuit(args, output)
    angles = input_angles(args, circuit.parameter_count)
    c_max = resolve_c_max(args, circuit.graph) if args.ratio else args.c_max
    report = expected_cut(
        circuit,
        angles,
        Backend.from_string(args.backend),
        parse_truncation(args.truncation),
        c_max=c_max,
        threads=args.threads,
    )
    payload = report.to_dict()

    if args.shots is not None:
        if args.shots < 1:
            raise UsageError(f"--shots must be positive, got {args.shots}")
        drawn = sample_bitstrings(
            circuit, angles, args.shots, seed=substream(args.seed, "samples")
        )
        cuts = [sample.cut for sample in drawn]
        payload["samples"] = {
            "shots": len(drawn),
            "mean_cut": float(np.mean(cuts)),
            "best_cut": max(cuts),
        }
        output.save(SAMPLES_FILENAME, format_samples(drawn))

    if args.variance_samples:
        estimate = variance_estimate(
            circuit, args.variance_samples, seed=substream(args.seed, "variance")
        )
        payload["variance"] = {
            "value": estimate.variance,
            "standard_error": estimate.standard_error,
            "samples": estimate.samples,
        }
        degrees = {circuit.graph.degree(node) for node in range(circuit.graph.n)}
        if len(degrees) == 1 and circuit.kind.endswith("zy"):
            (degree,) = degrees
            bound = variance_lower_bound(degree, circuit.graph.n, circuit.rounds)
            payload["variance"]["lower_bound"] = float(bound)
    output.emit_json(payload, "expectation.json")


def guarantee_command(args: argparse.Namespace, output: OutputWriter) -> None:
    options = BoundOptions(
        degree=args.degree,
        n_plus_ratio=args.n_plus_ratio,
        k_max=args.k_max,
        k=args.k,
    )
    bound = compute_bound(args.method, options)
    output.emit_json(bound.to_dict(), "guarantee.json")
    if args.sweep_points:
        rows = theta_sweep(bound, args.sweep_points)
        output.save_csv("sweep.csv", ("theta", "objective"), rows)


def optimize_command(args: argparse.Namespace, output: OutputWriter) -> None:
    circuit = input_circuit(args, output)
    settings = optimizer_settings(args)
    start = optional_angles(args, circuit.parameter_count)
    if start is None:
        rng = substream(args.seed, "init-angles")
        start = initial_angles(settings, circuit.parameter_count, rng)
    backend = Backend.from_string(args.backend)
    mode = parse_truncation(args.truncation)
    c_max = resolve_c_max(args, circuit.graph)

    result = maximize_cut(circuit, settings, start, backend, mode, c_max)
    if result.budget_exhausted:
        logger.warning("Evaluation budget exhausted after %d calls", result.iterations)

    report = expected_cut(circuit, result.angles, backend, mode, c_max=c_max)
    payload = {
        "ansatz": circuit.kind,
        "scheme": circuit.scheme.variant.value,
        "objective": settings.objective,
        "objective_value": result.best_value,
        "expected_cut": report.expected_cut,
        "ratio": report.ratio,
        "c_max": c_max,
        "angles": list(result.angles),
        "iterations": result.iterations,
        "reached_target": result.reached_target,
        "budget_exhausted": result.budget_exhausted,
    }
    if circuit.n_qubits <= config.MAX_QUBITS:
        best = most_probable_bitstring(circuit, result.angles)
        payload["most_probable"] = {"bits": bits_to_string(best.bits), "cut": best.cut}
    output.emit_json(payload, "optimize.json")
    output.save_csv("trace.csv", ("evaluation", "value"), enumerate(result.trace, 1))


def tts_command(args: argparse.Namespace, output: OutputWriter) -> None:
    settings = optimizer_settings(args)
    records = []
    for n in args.n:
        batch = run_tts_ensemble(
            n,
            args.graphs,
            args.ansatz,
            args.scheme,
            settings,
            seed=args.seed,
            threads=args.threads,
            degree=args.degree,
        )
        records.extend(batch)
        for record in batch:
            output.manifest.timings[record.graph_id] = record.wall_time

    lines = "".join(
        json.dumps(record.to_dict(include_traces=args.traces)) + "\n"
        for record in records
    )
    output.emit(lines)
    output.save("records.jsonl", lines)

    rows = summarize_tts(records)
    output.save_csv("summary.csv", ("n", "median", "q25", "q75"), rows)
    if len(rows) >= 3:
        fit = scaling_fit([(n, median) for n, median, _, _ in rows])
        logger.info("Median iterations scale as %.4f * %.4f^N", fit.a, fit.b)
        output.save(
            "fit.json",
            json.dumps({"a": fit.a, "b": fit.b, "residual": fit.residual}, indent=2)
            + "\n",
        )


def oracle_command(args: argparse.Namespace, output: OutputWriter) -> None:
    graph = input_graph(args, output)
    best = brute_force_maxcut(graph, threads=args.threads)
    payload = {
        "n": graph.n,
        "m": graph.m,
        "c_max": best.cut,
        "bits": bits_to_string(best.bits),
    }
    output.emit_json(payload, "oracle.json")


def read_samples(path: Path) -> List[Sequence[int]]:
    """Bitstrings one per line; anything after the first field is ignored."""
    if not path.exists():
        raise FileNotFoundError(f"Sample file not found: {path}")
    samples = []
    for raw in path.read_text().splitlines():
        content = raw.split("#", 1)[0].strip()
        if content:
            samples.append(string_to_bits(content.split()[0]))
    return samples


def postprocess_command(args: argparse.Namespace, output: OutputWriter) -> None:
    if args.samples is not None:
        graph = input_graph(args, output)
        output.manifest.inputs.append(str(args.samples))
        samples = read_samples(Path(args.samples))
    else:
        circuit = input_circuit(args, output)
        graph = circuit.graph
        angles = input_angles(args, circuit.parameter_count)
        drawn = sample_bitstrings(
            circuit, angles, args.shots, seed=substream(args.seed, "samples")
        )
        output.save(SAMPLES_FILENAME, format_samples(drawn))
        samples = [sample.bits for sample in drawn]

    c_max = required_c_max(args, graph)
    summary = postprocess_samples(
        graph, samples, c_max, seed=substream(args.seed, "shuffles")
    )
    payload = {
        "samples": summary.samples,
        "c_max": c_max,
        "raw_mean_ratio": summary.raw_mean_ratio,
        "improved_mean_ratio": summary.improved_mean_ratio,
    }
    output.emit_json(payload, "postprocess.json")


def cycles_command(args: argparse.Namespace, output: OutputWriter) -> None:
    graph = input_graph(args, output)
    count = count_simple_cycles(graph, cap=args.cap)
    shortest = girth(graph)
    payload: Dict[str, object] = {
        "n": graph.n,
        "m": graph.m,
        "simple_cycles": count.count,
        "cap_reached": count.exceeded,
        "cycle_space_dimension": cycle_space_dimension(graph),
        "girth": None if math.isinf(shortest) else int(shortest),
        "connected": is_connected(graph),
        "biconnected": is_biconnected(graph),
    }
    if payload["connected"]:
        blocks = biconnected_components(graph)
        payload["blocks"] = len(blocks.blocks)
        payload["bridges"] = [list(edge) for edge in blocks.bridges]
        payload["articulation_nodes"] = sorted(blocks.articulation_nodes)
    output.emit_json(payload, "cycles.json")


def entropy_command(args: argparse.Namespace, output: OutputWriter) -> None:
    circuit = input_circuit(args, output)
    angles = input_angles(args, circuit.parameter_count)
    n = circuit.n_qubits
    cut = n // 2 if args.cut is None else args.cut
    payload = {
        "n_qubits": n,
        "cut_position": cut,
        "entropy_bits": half_chain_entropy(circuit, angles, cut),
    }
    output.emit_json(payload, "entropy.json")
    if args.all_cuts:
        rows = [(k, half_chain_entropy(circuit, angles, k)) for k in range(n + 1)]
        output.save_csv("entropy.csv", ("cut_position", "entropy_bits"), rows)


COMMANDS: Dict[str, Command] = {
    "orient": orient_command,
    "ansatz": ansatz_command,
    "simulate": simulate_command,
    "guarantee": guarantee_command,
    "optimize": optimize_command,
    "tts": tts_command,
    "oracle": oracle_command,
    "postprocess": postprocess_command,
    "cycles": cycles_command,
    "entropy": entropy_command,
}
