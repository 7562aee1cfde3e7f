"""Entanglement and landscape diagnostics."""

from __future__ import annotations

from dataclasses import dataclass
from typing import Sequence

import numpy as np

from ..ansatz import AnsatzCircuit
from .statevector import prepare_state, statevector_expectations
from .types import SimulationError


@dataclass(frozen=True, slots=True)
class VarianceEstimate:
    """Sample variance of the expected cut over uniformly random angles."""

    variance: float
    standard_error: float
    samples: int


def half_chain_entropy(
    circuit: AnsatzCircuit, angles: Sequence[float], cut_position: int
) -> float:
    """Von Neumann entropy, in bits, of qubits [0, cut_position)."""
    n = circuit.n_qubits
    if not 0 <= cut_position <= n:
        raise SimulationError(f"Cut position must lie in 0..{n}, got {cut_position}")
    amplitudes = prepare_state(circuit, angles)
    # Low qubits are the low index bits, i.e. the column index of this matrix
    matrix = amplitudes.reshape(2 ** (n - cut_position), 2**cut_position)
    singular = np.linalg.svd(matrix, compute_uv=False)
    weights = singular**2
    weights = weights[weights > 1e-15]
    return float(-np.sum(weights * np.log2(weights)))


def variance_estimate(
    circuit: AnsatzCircuit,
    n_samples: int,
    seed: int | np.random.Generator | None = 0,
) -> VarianceEstimate:
    """Monte-Carlo Var of the expected cut with angles uniform in [0, 2*pi)."""
    if n_samples < 2:
        raise SimulationError(f"Need at least 2 samples, got {n_samples}")
    rng = np.random.default_rng(seed)
    values = np.empty(n_samples)
    for index in range(n_samples):
        angles = rng.uniform(0.0, 2 * np.pi, size=circuit.parameter_count)
        values[index] = statevector_expectations(circuit, angles).expected_cut

    variance = float(np.var(values, ddof=1))
    deviations = (values - values.mean()) ** 2
    standard_error = float(np.std(deviations, ddof=1) / np.sqrt(n_samples))
    return VarianceEstimate(
        variance=variance, standard_error=standard_error, samples=n_samples
    )
