"""Depth and landscape statistics of built circuits."""

from __future__ import annotations

import math
from fractions import Fraction

from .types import AnsatzCircuit, AnsatzError

# A ZY or ZZ block compiles to two CNOTs around a single-qubit rotation
TWO_QUBIT_BLOCK_LAYERS = 2


def two_qubit_depth(circuit: AnsatzCircuit) -> int:
    """Two-qubit layer depth, scheduling gates greedily in application order.

    Single-qubit gates are free.
    """
    ready = [0] * circuit.n_qubits
    for gate in circuit.two_qubit_gates():
        a, b = gate.qubits
        finish = max(ready[a], ready[b]) + TWO_QUBIT_BLOCK_LAYERS
        ready[a] = ready[b] = finish
    return max(ready, default=0)


def variance_lower_bound(degree: int, n: int, p: int) -> Fraction:
    """Lower bound D*N / 2^(D(2*ceil(p/2)+1) - 1) on Var<H> over uniform angles."""
    if degree < 1 or n < 1 or p < 1:
        raise AnsatzError(f"Need D, N, p >= 1, got D={degree}, N={n}, p={p}")
    exponent = degree * (2 * math.ceil(p / 2) + 1) - 1
    return Fraction(degree * n, 2**exponent)
