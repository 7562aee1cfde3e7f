"""Dense statevector backend.

Qubit q is bit q of the basis-state index (qubit 0 least significant). The
amplitudes are kept as a tensor of shape (2,) * n, where qubit q lives on
axis n - 1 - q, and gates update ``np.moveaxis`` views in place.
"""

from __future__ import annotations

import logging
from typing import Sequence

import numpy as np

from .. import config
from ..ansatz import (
    AnsatzCircuit,
    QaoaCostGate,
    QaoaMixerGate,
    RYGate,
    ZYGate,
)
from ..errors import ResourceLimitError
from .types import ExpectationReport, SimulationError

logger = logging.getLogger(__name__)


def check_angles(circuit: AnsatzCircuit, angles: Sequence[float]) -> np.ndarray:
    """Angles as a float array of length ``parameter_count``."""
    values = np.asarray(angles, dtype=float).reshape(-1)
    if values.size != circuit.parameter_count:
        raise SimulationError(
            f"Expected {circuit.parameter_count} angles, got {values.size}"
        )
    return values


def check_qubit_cap(n_qubits: int, cap: int | None = None) -> None:
    limit = config.MAX_QUBITS if cap is None else cap
    if n_qubits > limit:
        raise ResourceLimitError(
            f"Statevector simulation of {n_qubits} qubits exceeds the cap of "
            f"{limit}",
            cap=limit,
        )


def prepare_state(circuit: AnsatzCircuit, angles: Sequence[float]) -> np.ndarray:
    """Apply the circuit to |+>^N and return the flat amplitude vector.

    Raises:
        ResourceLimitError: If the qubit count exceeds the configured cap
        SimulationError: If the angle vector has the wrong length
    """
    values = check_angles(circuit, angles)
    n = circuit.n_qubits
    check_qubit_cap(n)

    real = all(isinstance(gate, (ZYGate, RYGate)) for gate in circuit.gates)
    dtype = np.float64 if real else np.complex128
    state = np.full((2,) * n, 2.0 ** (-n / 2), dtype=dtype)

    for gate in circuit.gates:
        angle = values[gate.param]
        if isinstance(gate, ZYGate):
            _apply_zy(state, n, gate.control, gate.target, angle)
        elif isinstance(gate, QaoaCostGate):
            _apply_zz(state, n, gate.i, gate.j, angle)
        elif isinstance(gate, QaoaMixerGate):
            _apply_mixer(state, n, gate.qubit, angle)
        else:
            _apply_ry(state, n, gate.qubit, angle)

    return state.reshape(-1)


def measurement_probabilities(
    circuit: AnsatzCircuit, angles: Sequence[float]
) -> np.ndarray:
    """Probability of each basis state, indexed as in ``prepare_state``."""
    amplitudes = prepare_state(circuit, angles)
    probabilities = np.abs(amplitudes) ** 2
    return probabilities / probabilities.sum()


def statevector_expectations(
    circuit: AnsatzCircuit,
    angles: Sequence[float],
    c_max: float | None = None,
) -> ExpectationReport:
    """Exact <Z_i Z_j> on every edge of the circuit's graph."""
    probabilities = measurement_probabilities(circuit, angles)
    index = np.arange(probabilities.size, dtype=np.int64)
    per_edge = []
    for i, j in circuit.graph.edges:
        parity = ((index >> i) ^ (index >> j)) & 1
        value = float(np.dot(probabilities, 1.0 - 2.0 * parity))
        per_edge.append(((i, j), float(np.clip(value, -1.0, 1.0))))
    return ExpectationReport.from_edges(
        tuple(per_edge), backend="statevector", truncation="none", c_max=c_max
    )


def _pair_view(state: np.ndarray, n: int, a: int, b: int) -> np.ndarray:
    return np.moveaxis(state, (n - 1 - a, n - 1 - b), (0, 1))


def _apply_zy(
    state: np.ndarray, n: int, control: int, target: int, theta: float
) -> None:
    c, s = np.cos(theta / 2), np.sin(theta / 2)
    view = _pair_view(state, n, control, target)
    p00, p01 = view[0, 0].copy(), view[0, 1].copy()
    p10, p11 = view[1, 0].copy(), view[1, 1].copy()
    # R_Y(theta) on the target where Z_control = +1, R_Y(-theta) where it is -1
    view[0, 0] = c * p00 - s * p01
    view[0, 1] = c * p01 + s * p00
    view[1, 0] = c * p10 + s * p11
    view[1, 1] = c * p11 - s * p10


def _apply_zz(state: np.ndarray, n: int, i: int, j: int, gamma: float) -> None:
    view = _pair_view(state, n, i, j)
    same, different = np.exp(-0.5j * gamma), np.exp(0.5j * gamma)
    view[0, 0] *= same
    view[1, 1] *= same
    view[0, 1] *= different
    view[1, 0] *= different


def _apply_mixer(state: np.ndarray, n: int, qubit: int, beta: float) -> None:
    view = np.moveaxis(state, n - 1 - qubit, 0)
    c, s = np.cos(beta), np.sin(beta)
    p0, p1 = view[0].copy(), view[1].copy()
    view[0] = c * p0 - 1j * s * p1
    view[1] = c * p1 - 1j * s * p0


def _apply_ry(state: np.ndarray, n: int, qubit: int, theta: float) -> None:
    view = np.moveaxis(state, n - 1 - qubit, 0)
    c, s = np.cos(theta / 2), np.sin(theta / 2)
    p0, p1 = view[0].copy(), view[1].copy()
    view[0] = c * p0 - s * p1
    view[1] = s * p0 + c * p1
