"""Circuit constructions: bipolar and light-cone ZY_p, QAOA_p and R_Y."""

from __future__ import annotations

import logging
from typing import List

from ..graphs import UndirectedGraph, edge_key
from ..orientation import OrientedDag, bfs_lightcone_orientation
from .coloring import greedy_edge_coloring
from .schemes import GateClassKey, bind_parameters, scheme_from_labels
from .types import (
    AnsatzCircuit,
    AnsatzError,
    Gate,
    QaoaCostGate,
    QaoaMixerGate,
    RYGate,
    SchemeVariant,
    ZYGate,
)

logger = logging.getLogger(__name__)


def build_bipolar_zy(
    dag: OrientedDag,
    p: int,
    scheme: SchemeVariant = SchemeVariant.UNIFORM,
    kind: str = "bipolar-zy",
) -> AnsatzCircuit:
    """Build ZY_p over an acyclic orientation.

    Even rounds walk ``dag.topo_order`` with the stored orientation, odd rounds
    walk the reversed order with every edge reversed. When a node is reached
    its entering gates are applied, tails ascending, so every gate with its
    Y end on a node precedes every gate with its Z end there.

    Args:
        dag: Acyclic orientation of the problem graph
        p: Number of rounds, at least 1
        scheme: Parameter sharing rule
        kind: Name recorded on the circuit

    Raises:
        AnsatzError: If ``p`` < 1 or ``dag`` has a directed cycle
    """
    if p < 1:
        raise AnsatzError(f"Round count must be at least 1, got {p}")
    if dag.topo_order is None:
        raise AnsatzError("Cannot build a ZY ansatz over a cyclic orientation")

    rounds = (dag, dag.reversed())
    pairs: List[tuple[int, int]] = []
    keys: List[GateClassKey] = []
    for layer in range(p):
        oriented = rounds[layer % 2]
        assert oriented.topo_order is not None
        for head in oriented.topo_order:
            for tail in oriented.predecessors(head):
                pairs.append((tail, head))
                keys.append(
                    GateClassKey(
                        round=layer,
                        tail=tail,
                        head=head,
                        tail_out_degree=oriented.out_degree(tail),
                        head_in_degree=oriented.in_degree(head),
                    )
                )

    parameters = bind_parameters(scheme, keys)
    gates = tuple(
        ZYGate(control=tail, target=head, param=index)
        for (tail, head), index in zip(pairs, parameters.binding)
    )
    logger.debug(
        "Built %s with %d gates and %d parameters",
        kind,
        len(gates),
        parameters.parameter_count,
    )
    return AnsatzCircuit(
        kind=kind, graph=dag.base, gates=gates, rounds=p, scheme=parameters
    )


def build_lightcone_zy(
    graph: UndirectedGraph,
    root: int,
    p: int,
    scheme: SchemeVariant = SchemeVariant.UNIFORM,
) -> AnsatzCircuit:
    """ZY_p over the recursive-BFS orientation rooted at ``root``."""
    dag = bfs_lightcone_orientation(graph, root)
    return build_bipolar_zy(dag, p, scheme, kind="lightcone-zy")


def build_qaoa(graph: UndirectedGraph, p: int) -> AnsatzCircuit:
    """QAOA_p: per round a ZZ cost layer (gamma_l) then an X mixer layer (beta_l).

    Cost gates are grouped by greedy edge colour so each colour is one parallel
    layer. gamma_l is parameter 2l and beta_l is 2l + 1.
    """
    if p < 1:
        raise AnsatzError(f"Round count must be at least 1, got {p}")
    if graph.m == 0:
        raise AnsatzError("QAOA needs a graph with at least one edge")
    colors = greedy_edge_coloring(graph)
    ordered = sorted(
        range(graph.m), key=lambda k: (colors[edge_key(*graph.edges[k])], k)
    )

    gates: List[Gate] = []
    labels: List[str] = []
    for layer in range(p):
        for k in ordered:
            i, j = graph.edges[k]
            gates.append(QaoaCostGate(i=i, j=j, param=2 * layer))
            labels.append(f"gamma{layer}")
        for qubit in graph.nodes():
            gates.append(QaoaMixerGate(qubit=qubit, param=2 * layer + 1))
            labels.append(f"beta{layer}")
    parameters = scheme_from_labels(SchemeVariant.UNIFORM, labels)
    return AnsatzCircuit(
        kind="qaoa", graph=graph, gates=tuple(gates), rounds=p, scheme=parameters
    )


def build_ry(graph: UndirectedGraph) -> AnsatzCircuit:
    """One R_Y rotation per qubit on |+>^N, one parameter each."""
    gates = tuple(RYGate(qubit=qubit, param=qubit) for qubit in graph.nodes())
    parameters = scheme_from_labels(
        SchemeVariant.PER_GATE, [f"q{qubit}" for qubit in graph.nodes()]
    )
    return AnsatzCircuit(
        kind="ry", graph=graph, gates=gates, rounds=1, scheme=parameters
    )
