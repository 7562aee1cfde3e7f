"""Expected cut through either backend."""

from __future__ import annotations

import logging
from concurrent.futures import ThreadPoolExecutor
from typing import Optional, Sequence

from ..ansatz import AnsatzCircuit
from ..graphs import Edge
from .pauli import pauli_backpropagate
from .statevector import check_angles, statevector_expectations
from .types import (
    Backend,
    ExpectationReport,
    SimulationError,
    TruncationKind,
    TruncationMode,
)

logger = logging.getLogger(__name__)


def expected_cut(
    circuit: AnsatzCircuit,
    angles: Sequence[float],
    backend: Backend = Backend.STATEVECTOR,
    mode: TruncationMode = TruncationMode(),
    c_max: Optional[float] = None,
    threads: int = 1,
) -> ExpectationReport:
    """Aggregate per-edge <Z_i Z_j> into the expected cut.

    Args:
        circuit: Circuit to evaluate
        angles: One angle per circuit parameter
        backend: Dense statevector or Pauli back-propagation
        mode: Path truncation (Pauli backend only)
        c_max: Optimal cut; adds the approximation ratio to the report
        threads: Parallel per-edge jobs for the Pauli backend

    Raises:
        SimulationError: If a truncation is requested from the dense backend
        ResourceLimitError: If a backend cap is exceeded
    """
    if backend is Backend.STATEVECTOR:
        if mode.kind is not TruncationKind.NONE:
            raise SimulationError(
                "The statevector backend is exact; use --backend pauli"
            )
        return statevector_expectations(circuit, angles, c_max)

    values = check_angles(circuit, angles)
    edges = circuit.graph.edges

    def job(edge: Edge) -> float:
        return pauli_backpropagate(circuit, values, edge, mode)

    if threads > 1 and len(edges) > 1:
        with ThreadPoolExecutor(max_workers=threads) as pool:
            results = list(pool.map(job, edges))
    else:
        results = [job(edge) for edge in edges]

    per_edge = tuple(
        (
            edge,
            max(-1.0, min(1.0, value)) if mode.kind is TruncationKind.NONE else value,
        )
        for edge, value in zip(edges, results)
    )
    logger.debug("Pauli backend evaluated %d edges (%s)", len(edges), mode)
    return ExpectationReport.from_edges(
        per_edge, backend=backend.value, truncation=str(mode), c_max=c_max
    )
