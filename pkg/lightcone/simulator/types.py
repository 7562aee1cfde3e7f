"""Simulation modes and result types."""

from __future__ import annotations

from dataclasses import dataclass
from enum import Enum
from typing import Any, Dict, Optional, Tuple

from ..errors import LightconeError
from ..graphs import Edge


class SimulationError(LightconeError):
    """Exception raised for invalid simulation requests."""

    pass


class Backend(Enum):
    STATEVECTOR = "statevector"
    PAULI = "pauli"

    @classmethod
    def from_string(cls, raw_value: str) -> Backend:
        normalized = raw_value.strip().lower()
        try:
            return cls(normalized)
        except ValueError as exc:
            raise SimulationError(
                f"Unknown backend '{raw_value}' (expected statevector or pauli)"
            ) from exc


class TruncationKind(Enum):
    NONE = "none"
    KLOCAL = "klocal"
    WEIGHT = "weight"
    COEFFICIENT = "coeff"


@dataclass(frozen=True, slots=True)
class TruncationMode:
    """How Pauli back-propagation discards paths.

    KLOCAL keeps gates inside the k-local subgraph of the measured edge,
    WEIGHT drops strings with more than ``value`` non-identity letters and
    COEFFICIENT drops terms with magnitude below ``value``.
    """

    kind: TruncationKind = TruncationKind.NONE
    value: float = 0.0

    def __post_init__(self) -> None:
        if self.kind is TruncationKind.KLOCAL and (
            self.value < 0 or self.value != int(self.value)
        ):
            raise SimulationError(f"k must be a nonnegative integer, got {self.value}")
        if self.kind is TruncationKind.WEIGHT and (
            self.value < 1 or self.value != int(self.value)
        ):
            raise SimulationError(
                f"Weight cap must be an integer >= 1, got {self.value}"
            )
        if self.kind is TruncationKind.COEFFICIENT and not self.value > 0:
            raise SimulationError(
                f"Coefficient threshold must be > 0, got {self.value}"
            )

    @classmethod
    def none(cls) -> TruncationMode:
        return cls()

    @classmethod
    def klocal(cls, k: int) -> TruncationMode:
        return cls(TruncationKind.KLOCAL, k)

    @classmethod
    def weight(cls, max_weight: int) -> TruncationMode:
        return cls(TruncationKind.WEIGHT, max_weight)

    @classmethod
    def coefficient(cls, threshold: float) -> TruncationMode:
        return cls(TruncationKind.COEFFICIENT, threshold)

    def __str__(self) -> str:
        if self.kind is TruncationKind.NONE:
            return "none"
        if self.kind is TruncationKind.COEFFICIENT:
            return f"coeff:{self.value:g}"
        return f"{self.kind.value}:{int(self.value)}"


def parse_truncation(text: str) -> TruncationMode:
    """Parse ``none``, ``klocal:K``, ``weight:W`` or ``coeff:C``."""
    normalized = text.strip().lower()
    if normalized == "none":
        return TruncationMode.none()
    name, _, raw = normalized.partition(":")
    try:
        if name == "klocal":
            return TruncationMode.klocal(int(raw))
        if name == "weight":
            return TruncationMode.weight(int(raw))
        if name == "coeff":
            return TruncationMode.coefficient(float(raw))
    except ValueError as exc:
        raise SimulationError(f"Invalid truncation value in '{text}'") from exc
    raise SimulationError(
        f"Unknown truncation '{text}' (expected none, klocal:K, weight:W or coeff:C)"
    )


@dataclass(frozen=True, slots=True)
class ExpectationReport:
    """Per-edge <Z_i Z_j> plus the expected cut M/2 - (1/2) sum <Z_i Z_j>."""

    per_edge: Tuple[Tuple[Edge, float], ...]
    expected_cut: float
    ratio: Optional[float]
    backend: str
    truncation: str

    @classmethod
    def from_edges(
        cls,
        per_edge: Tuple[Tuple[Edge, float], ...],
        backend: str,
        truncation: str,
        c_max: Optional[float] = None,
    ) -> ExpectationReport:
        expected = 0.5 * len(per_edge) - 0.5 * sum(value for _, value in per_edge)
        ratio = expected / c_max if c_max else None
        return cls(
            per_edge=per_edge,
            expected_cut=expected,
            ratio=ratio,
            backend=backend,
            truncation=truncation,
        )

    def edge_value(self, i: int, j: int) -> float:
        for (a, b), value in self.per_edge:
            if {a, b} == {i, j}:
                return value
        raise SimulationError(f"({i}, {j}) is not a measured edge")

    def to_dict(self) -> Dict[str, Any]:
        return {
            "backend": self.backend,
            "truncation": self.truncation,
            "expected_cut": self.expected_cut,
            "ratio": self.ratio,
            "per_edge": [
                {"edge": [i, j], "zz": value} for (i, j), value in self.per_edge
            ],
        }
