"""Computational-basis sampling from the dense state."""

from __future__ import annotations

from typing import List, Sequence

import numpy as np

from ..ansatz import AnsatzCircuit
from ..oracle import CutAssignment, cut_value
from .statevector import measurement_probabilities


def sample_bitstrings(
    circuit: AnsatzCircuit,
    angles: Sequence[float],
    shots: int,
    seed: int | np.random.Generator | None = 0,
) -> List[CutAssignment]:
    """Measure ``shots`` times; bit i of each sample is qubit i.

    Raises:
        ResourceLimitError: If the qubit count exceeds the statevector cap
    """
    probabilities = measurement_probabilities(circuit, angles)
    rng = np.random.default_rng(seed)
    outcomes = rng.choice(probabilities.size, size=shots, p=probabilities)
    n = circuit.n_qubits
    samples = []
    for outcome in outcomes:
        bits = tuple((int(outcome) >> qubit) & 1 for qubit in range(n))
        samples.append(CutAssignment(bits=bits, cut=cut_value(circuit.graph, bits)))
    return samples


def most_probable_bitstring(
    circuit: AnsatzCircuit, angles: Sequence[float]
) -> CutAssignment:
    """The basis state of largest probability (lowest index on ties)."""
    probabilities = measurement_probabilities(circuit, angles)
    outcome = int(np.argmax(probabilities))
    bits = tuple((outcome >> qubit) & 1 for qubit in range(circuit.n_qubits))
    return CutAssignment(bits=bits, cut=cut_value(circuit.graph, bits))


def format_samples(samples: Sequence[CutAssignment]) -> str:
    """One ``bits cut`` line per sample."""
    return "".join(f"{sample}\n" for sample in samples)
