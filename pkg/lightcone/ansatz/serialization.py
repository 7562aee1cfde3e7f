"""Circuit JSON documents.

Field order is fixed: n_qubits, rounds, scheme, gates, then the ansatz name
and the measured graph so that a document rebuilds the same circuit.
"""

from __future__ import annotations

import json
from typing import Any, Dict, List

from ..graphs import UndirectedGraph
from .types import (
    GATE_TYPES,
    AnsatzCircuit,
    AnsatzError,
    Gate,
    ParameterScheme,
    QaoaCostGate,
    SchemeVariant,
    ZYGate,
)


def circuit_to_dict(circuit: AnsatzCircuit) -> Dict[str, Any]:
    return {
        "n_qubits": circuit.n_qubits,
        "rounds": circuit.rounds,
        "scheme": {
            "variant": circuit.scheme.variant.value,
            "parameter_count": circuit.parameter_count,
            "labels": list(circuit.scheme.labels),
        },
        "gates": [
            {"kind": gate.kind, "qubits": list(gate.qubits), "param": gate.param}
            for gate in circuit.gates
        ],
        "ansatz": circuit.kind,
        "graph": {
            "n": circuit.graph.n,
            "edges": [list(e) for e in circuit.graph.edges],
        },
    }


def circuit_to_json(circuit: AnsatzCircuit) -> str:
    return json.dumps(circuit_to_dict(circuit), indent=2) + "\n"


def circuit_from_json(text: str) -> AnsatzCircuit:
    """Rebuild a circuit written by ``circuit_to_json``.

    Raises:
        AnsatzError: If the document is malformed
    """
    try:
        data = json.loads(text)
    except json.JSONDecodeError as exc:
        raise AnsatzError(f"Circuit document is not valid JSON: {exc}") from exc
    if not isinstance(data, dict):
        raise AnsatzError("Circuit document must be a JSON object")

    try:
        graph_data = data["graph"]
        graph = UndirectedGraph.from_edges(graph_data["n"], graph_data["edges"])
        scheme_data = data["scheme"]
        gates = [_gate_from_dict(entry) for entry in data["gates"]]
        scheme = ParameterScheme(
            variant=SchemeVariant.from_string(scheme_data["variant"]),
            binding=tuple(gate.param for gate in gates),
            labels=tuple(scheme_data["labels"]),
        )
        circuit = AnsatzCircuit(
            kind=data["ansatz"],
            graph=graph,
            gates=tuple(gates),
            rounds=int(data["rounds"]),
            scheme=scheme,
        )
    except (KeyError, TypeError, ValueError) as exc:
        raise AnsatzError(f"Malformed circuit document: {exc!r}") from exc

    if circuit.n_qubits != data.get("n_qubits"):
        raise AnsatzError(
            f"n_qubits {data.get('n_qubits')} disagrees with graph size {graph.n}"
        )
    return circuit


def _gate_from_dict(entry: Dict[str, Any]) -> Gate:
    kind = entry["kind"]
    if kind not in GATE_TYPES:
        raise AnsatzError(f"Unknown gate kind '{kind}'")
    qubits: List[int] = [int(q) for q in entry["qubits"]]
    param = int(entry["param"])
    if kind == ZYGate.kind:
        return ZYGate(control=qubits[0], target=qubits[1], param=param)
    if kind == QaoaCostGate.kind:
        return QaoaCostGate(i=qubits[0], j=qubits[1], param=param)
    (qubit,) = qubits
    return GATE_TYPES[kind](qubit=qubit, param=param)  # type: ignore[call-arg]
