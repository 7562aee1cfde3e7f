"""Angle settings that prepare a known cut exactly."""

from __future__ import annotations

import math
from typing import Dict, Sequence

import numpy as np

from ..orientation import OrientedDag
from .builders import build_bipolar_zy
from .types import AnsatzError, SchemeVariant


def set_solution_angles(dag: OrientedDag, assignment: Sequence[int]) -> np.ndarray:
    """Per-gate angles for bipolar ZY_1 that prepare (|x> + |not x>)/sqrt(2).

    Every non-source node is tied to its smallest in-neighbour; the gate on
    that tree edge gets +pi/2 when the endpoints are on opposite sides of the
    cut and -pi/2 otherwise. All other gates get 0.

    Args:
        dag: Orientation with a single source
        assignment: One bit per node

    Returns:
        Angle vector for ``build_bipolar_zy(dag, 1, SchemeVariant.PER_GATE)``

    Raises:
        AnsatzError: If the assignment length is wrong or the DAG has several
            sources
    """
    bits = _check_bits(assignment, dag.base.n)
    if len(dag.sources) != 1:
        raise AnsatzError(
            f"Solution angles need a single source, found {len(dag.sources)}"
        )

    parent: Dict[int, int] = {
        node: dag.predecessors(node)[0]
        for node in dag.base.nodes()
        if dag.predecessors(node)
    }
    circuit = build_bipolar_zy(dag, 1, SchemeVariant.PER_GATE)
    angles = np.zeros(circuit.parameter_count)
    for gate in circuit.gates:
        if parent.get(gate.qubits[1]) == gate.qubits[0]:
            control, target = gate.qubits
            sign = 1.0 if bits[control] != bits[target] else -1.0
            angles[gate.param] = sign * math.pi / 2
    return angles


def ry_solution_angles(assignment: Sequence[int]) -> np.ndarray:
    """R_Y angles turning |+> into |x_i>: +pi/2 for a 1 bit, -pi/2 for a 0 bit."""
    bits = _check_bits(assignment, len(assignment))
    return np.array([math.pi / 2 if bit else -math.pi / 2 for bit in bits])


def _check_bits(assignment: Sequence[int], n: int) -> tuple[int, ...]:
    if len(assignment) != n:
        raise AnsatzError(f"Assignment has {len(assignment)} bits, graph has {n} nodes")
    bits = tuple(int(bit) for bit in assignment)
    if any(bit not in (0, 1) for bit in bits):
        raise AnsatzError(f"Assignment must contain only 0/1, got {list(assignment)}")
    return bits
