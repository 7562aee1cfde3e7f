"""Pauli-path back-propagation.

Pauli strings are symplectic (x, z) bitmasks over qubits, with X = (1, 0),
Z = (0, 1) and Y = (1, 1). A sum of strings is a dict from mask pair to a real
coefficient. For a gate exp(-i a G) and a string P anticommuting with G,
U^dag P U = cos(2a) P - i sin(2a) P G; commuting strings pass unchanged.
"""

from __future__ import annotations

import logging
import math
from dataclasses import dataclass
from typing import Dict, FrozenSet, List, Optional, Sequence, Tuple

from .. import config
from ..ansatz import AnsatzCircuit, QaoaCostGate, QaoaMixerGate, RYGate, ZYGate
from ..errors import ResourceLimitError
from ..graphs import Edge, edge_key
from .filters import PauliKey, PropagationContext, TermFilterPipeline
from .statevector import check_angles
from .truncation import k_local_subgraph
from .types import SimulationError, TruncationKind, TruncationMode

logger = logging.getLogger(__name__)

LETTER_MASKS = {"X": (1, 0), "Y": (1, 1), "Z": (0, 1)}


@dataclass(frozen=True, slots=True)
class PauliTerm:
    """A Pauli string with a real coefficient; identity letters are not stored."""

    letters: Tuple[Tuple[int, str], ...]
    coefficient: float

    def __post_init__(self) -> None:
        for qubit, letter in self.letters:
            if letter not in LETTER_MASKS:
                raise SimulationError(
                    f"Unknown Pauli letter {letter!r} on qubit {qubit}"
                )

    @classmethod
    def from_masks(cls, x: int, z: int, coefficient: float) -> PauliTerm:
        letters = []
        support = x | z
        qubit = 0
        while support >> qubit:
            if (support >> qubit) & 1:
                bits = ((x >> qubit) & 1, (z >> qubit) & 1)
                letters.append((qubit, {(1, 0): "X", (1, 1): "Y", (0, 1): "Z"}[bits]))
            qubit += 1
        return cls(letters=tuple(letters), coefficient=coefficient)

    def masks(self) -> PauliKey:
        x = z = 0
        for qubit, letter in self.letters:
            lx, lz = LETTER_MASKS[letter]
            x |= lx << qubit
            z |= lz << qubit
        return x, z

    @property
    def weight(self) -> int:
        return len(self.letters)

    def __str__(self) -> str:
        body = " ".join(f"{letter}{qubit}" for qubit, letter in self.letters) or "I"
        return f"{self.coefficient:+.6g} {body}"


@dataclass(frozen=True, slots=True)
class _GateAction:
    x: int
    z: int
    angle: float
    # Two-qubit gate outside the k-local edge set: only cosine factors survive
    split: bool


def pauli_backpropagate(
    circuit: AnsatzCircuit,
    angles: Sequence[float],
    edge: Edge,
    mode: TruncationMode = TruncationMode(),
    term_cap: Optional[int] = None,
) -> float:
    """<Z_i Z_j> by propagating the observable from the last gate to the first.

    Args:
        circuit: Circuit to evaluate
        angles: One angle per circuit parameter
        edge: Measured pair (i, j)
        mode: Path truncation; ``TruncationMode()`` is exact
        term_cap: Maximum live terms (default from config)

    Returns:
        Sum of the coefficients of the strings made only of X and I

    Raises:
        ResourceLimitError: If the number of live terms exceeds the cap
        SimulationError: For a bad edge or angle vector
    """
    terms = propagate_observable(circuit, angles, edge, mode, term_cap)
    return math.fsum(coefficient for (_, z), coefficient in terms.items() if z == 0)


def propagate_observable(
    circuit: AnsatzCircuit,
    angles: Sequence[float],
    edge: Edge,
    mode: TruncationMode = TruncationMode(),
    term_cap: Optional[int] = None,
) -> Dict[PauliKey, float]:
    """The Heisenberg-picture Pauli sum of Z_i Z_j at the circuit input."""
    values = check_angles(circuit, angles)
    i, j = edge
    if not (0 <= i < circuit.n_qubits and 0 <= j < circuit.n_qubits) or i == j:
        raise SimulationError(f"({i}, {j}) is not a pair of distinct qubits")
    cap = config.PAULI_TERM_CAP if term_cap is None else term_cap

    region: Optional[FrozenSet[Edge]] = None
    if mode.kind is TruncationKind.KLOCAL:
        _, region = k_local_subgraph(circuit.graph, (i, j), int(mode.value))

    actions = _gate_actions(circuit, values, region)
    pipeline = TermFilterPipeline.for_mode(mode)
    context = PropagationContext(terms={(0, (1 << i) | (1 << j)): 1.0})

    for position in range(len(actions) - 1, -1, -1):
        action = actions[position]
        if action.split:
            context.terms = _split_conjugate(context.terms, action)
        else:
            context.terms = _conjugate(context.terms, action)
        context.gate_position = position
        context = pipeline.process(context)
        if len(context.terms) > cap:
            raise ResourceLimitError(
                f"Pauli propagation of edge ({i}, {j}) reached {len(context.terms)} "
                f"terms, above the cap of {cap}",
                cap=cap,
            )

    if context.dropped:
        logger.debug("Edge (%d, %d) dropped terms: %s", i, j, context.dropped)
    return context.terms


def _gate_actions(
    circuit: AnsatzCircuit, values: Sequence[float], region: Optional[FrozenSet[Edge]]
) -> List[_GateAction]:
    actions: List[_GateAction] = []
    for gate in circuit.gates:
        theta = float(values[gate.param])
        split = region is not None and len(gate.qubits) == 2 and (
            edge_key(*gate.qubits) not in region
        )
        if isinstance(gate, ZYGate):
            x = 1 << gate.target
            z = (1 << gate.control) | (1 << gate.target)
            actions.append(_GateAction(x, z, theta / 2, split))
        elif isinstance(gate, QaoaCostGate):
            z = (1 << gate.i) | (1 << gate.j)
            actions.append(_GateAction(0, z, theta / 2, split))
        elif isinstance(gate, QaoaMixerGate):
            actions.append(_GateAction(1 << gate.qubit, 0, theta, False))
        elif isinstance(gate, RYGate):
            bit = 1 << gate.qubit
            actions.append(_GateAction(bit, bit, theta / 2, False))
    return actions


def _conjugate(
    terms: Dict[PauliKey, float], action: _GateAction
) -> Dict[PauliKey, float]:
    gx, gz = action.x, action.z
    cos2, sin2 = math.cos(2 * action.angle), math.sin(2 * action.angle)
    generator_phase = (gx & gz).bit_count()
    result: Dict[PauliKey, float] = {}
    for (x, z), coefficient in terms.items():
        if (((x & gz) ^ (z & gx)).bit_count() & 1) == 0:
            result[(x, z)] = result.get((x, z), 0.0) + coefficient
            continue
        result[(x, z)] = result.get((x, z), 0.0) + coefficient * cos2
        x3, z3 = x ^ gx, z ^ gz
        # P G = i^f P', and -i * i^f is +1 for f = 1, -1 for f = 3
        f = (
            (x & z).bit_count()
            + generator_phase
            + 2 * (z & gx).bit_count()
            - (x3 & z3).bit_count()
        ) % 4
        sign = 1.0 if f == 1 else -1.0
        result[(x3, z3)] = result.get((x3, z3), 0.0) + sign * sin2 * coefficient
    return result


def _split_conjugate(
    terms: Dict[PauliKey, float], action: _GateAction
) -> Dict[PauliKey, float]:
    gx, gz = action.x, action.z
    cos2 = math.cos(2 * action.angle)
    result: Dict[PauliKey, float] = {}
    for (x, z), coefficient in terms.items():
        clashes = ((x & gz) ^ (z & gx)).bit_count()
        result[(x, z)] = coefficient * cos2**clashes
    return result
