"""Statevector and Pauli back-propagation evaluation of ansatz circuits."""

from .diagnostics import VarianceEstimate, half_chain_entropy, variance_estimate
from .expectation import expected_cut
from .filters import (
    CoefficientFilter,
    PropagationContext,
    PruneFilter,
    TermFilter,
    TermFilterPipeline,
    WeightFilter,
)
from .pauli import PauliTerm, pauli_backpropagate, propagate_observable
from .sampling import format_samples, most_probable_bitstring, sample_bitstrings
from .statevector import (
    measurement_probabilities,
    prepare_state,
    statevector_expectations,
)
from .truncation import k_local_subgraph, node_distances
from .types import (
    Backend,
    ExpectationReport,
    SimulationError,
    TruncationKind,
    TruncationMode,
    parse_truncation,
)

__all__ = [
    "Backend",
    "CoefficientFilter",
    "ExpectationReport",
    "PauliTerm",
    "PropagationContext",
    "PruneFilter",
    "SimulationError",
    "TermFilter",
    "TermFilterPipeline",
    "TruncationKind",
    "TruncationMode",
    "VarianceEstimate",
    "WeightFilter",
    "expected_cut",
    "format_samples",
    "half_chain_entropy",
    "k_local_subgraph",
    "measurement_probabilities",
    "most_probable_bitstring",
    "node_distances",
    "parse_truncation",
    "pauli_backpropagate",
    "prepare_state",
    "propagate_observable",
    "sample_bitstrings",
    "statevector_expectations",
    "variance_estimate",
]
