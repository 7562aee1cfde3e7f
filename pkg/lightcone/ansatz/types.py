"""Gates, parameter schemes and circuits."""

from __future__ import annotations

from dataclasses import dataclass
from enum import Enum
from typing import ClassVar, Tuple, Union

from ..errors import LightconeError
from ..graphs import UndirectedGraph


class AnsatzError(LightconeError):
    """Exception raised for invalid ansatz requests or circuits."""

    pass


class SchemeVariant(Enum):
    """How gates share variational angles."""

    UNIFORM = "uniform"
    DEGREE_PAIR = "degree-pair"
    HEAD_IN_DEGREE = "head-in-degree"
    PER_GATE = "per-gate"

    @classmethod
    def from_string(cls, raw_value: str) -> SchemeVariant:
        """Parse a scheme name; case, hyphens and underscores are ignored."""
        compact = raw_value.strip().lower().replace("_", "").replace("-", "")
        for variant in cls:
            if variant.value.replace("-", "") == compact:
                return variant
        known = ", ".join(variant.value for variant in cls)
        raise AnsatzError(
            f"Unknown parameter scheme '{raw_value}' (expected one of {known})"
        )


@dataclass(frozen=True, slots=True)
class ZYGate:
    """exp(-i theta Z_control Y_target / 2)."""

    kind: ClassVar[str] = "zy"
    control: int
    target: int
    param: int

    @property
    def qubits(self) -> Tuple[int, ...]:
        return (self.control, self.target)


@dataclass(frozen=True, slots=True)
class QaoaCostGate:
    """exp(-i gamma Z_i Z_j / 2)."""

    kind: ClassVar[str] = "zz"
    i: int
    j: int
    param: int

    @property
    def qubits(self) -> Tuple[int, ...]:
        return (self.i, self.j)


@dataclass(frozen=True, slots=True)
class QaoaMixerGate:
    """exp(-i beta X)."""

    kind: ClassVar[str] = "x"
    qubit: int
    param: int

    @property
    def qubits(self) -> Tuple[int, ...]:
        return (self.qubit,)


@dataclass(frozen=True, slots=True)
class RYGate:
    """exp(-i theta Y / 2)."""

    kind: ClassVar[str] = "ry"
    qubit: int
    param: int

    @property
    def qubits(self) -> Tuple[int, ...]:
        return (self.qubit,)


Gate = Union[ZYGate, QaoaCostGate, QaoaMixerGate, RYGate]

GATE_TYPES = {cls.kind: cls for cls in (ZYGate, QaoaCostGate, QaoaMixerGate, RYGate)}


@dataclass(frozen=True, slots=True)
class ParameterScheme:
    """Binding of gate positions to parameter indices.

    ``labels[k]`` describes the gate class sharing parameter k, for example
    ``"r0:(2,1)"`` for round-0 degree pair (2, 1).
    """

    variant: SchemeVariant
    binding: Tuple[int, ...]
    labels: Tuple[str, ...]

    def __post_init__(self) -> None:
        used = set(self.binding)
        if used != set(range(len(self.labels))):
            raise AnsatzError(
                f"Parameter binding must cover 0..{len(self.labels) - 1} exactly, "
                f"got indices {sorted(used)}"
            )

    @property
    def parameter_count(self) -> int:
        return len(self.labels)


@dataclass(frozen=True, slots=True)
class AnsatzCircuit:
    """Parameterised circuit applied to |+>^N.

    ``graph`` is the MaxCut instance whose edges are measured; ``kind`` names
    the construction (bipolar-zy, lightcone-zy, qaoa or ry).
    """

    kind: str
    graph: UndirectedGraph
    gates: Tuple[Gate, ...]
    rounds: int
    scheme: ParameterScheme

    def __post_init__(self) -> None:
        if len(self.scheme.binding) != len(self.gates):
            raise AnsatzError(
                f"Scheme binds {len(self.scheme.binding)} gates, circuit has "
                f"{len(self.gates)}"
            )
        for position, gate in enumerate(self.gates):
            if gate.param != self.scheme.binding[position]:
                raise AnsatzError(f"Gate {position} disagrees with the scheme binding")
            for qubit in gate.qubits:
                if not 0 <= qubit < self.n_qubits:
                    raise AnsatzError(f"Gate {position} acts on missing qubit {qubit}")

    @property
    def n_qubits(self) -> int:
        return self.graph.n

    @property
    def parameter_count(self) -> int:
        return self.scheme.parameter_count

    def two_qubit_gates(self) -> Tuple[Gate, ...]:
        return tuple(gate for gate in self.gates if len(gate.qubits) == 2)
