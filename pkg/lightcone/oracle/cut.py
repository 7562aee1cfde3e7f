"""Cut values, assignments and approximation ratios."""

from __future__ import annotations

from dataclasses import dataclass
from typing import Optional, Sequence, Tuple

from ..errors import LightconeError
from ..graphs import UndirectedGraph

Bits = Tuple[int, ...]


class OracleError(LightconeError):
    """Exception raised for invalid assignments or oracle requests."""

    pass


@dataclass(frozen=True, slots=True)
class CutAssignment:
    """A 0/1 side per node with its cut size."""

    bits: Bits
    cut: int
    is_optimal: Optional[bool] = None

    def __str__(self) -> str:
        return f"{bits_to_string(self.bits)} {self.cut}"


def check_bits(graph: UndirectedGraph, bits: Sequence[int]) -> Bits:
    """Validate length and alphabet of an assignment."""
    if len(bits) != graph.n:
        raise OracleError(f"Assignment has {len(bits)} bits, graph has {graph.n} nodes")
    values = tuple(int(bit) for bit in bits)
    if any(bit not in (0, 1) for bit in values):
        raise OracleError(f"Assignment must contain only 0/1, got {list(bits)}")
    return values


def cut_value(graph: UndirectedGraph, bits: Sequence[int]) -> int:
    """Number of edges whose endpoints sit on different sides."""
    values = check_bits(graph, bits)
    return sum(1 for i, j in graph.edges if values[i] != values[j])


def assignment(graph: UndirectedGraph, bits: Sequence[int]) -> CutAssignment:
    values = check_bits(graph, bits)
    return CutAssignment(bits=values, cut=cut_value(graph, values))


def complement(bits: Sequence[int]) -> Bits:
    return tuple(1 - int(bit) for bit in bits)


def bits_to_string(bits: Sequence[int]) -> str:
    return "".join(str(int(bit)) for bit in bits)


def string_to_bits(text: str) -> Bits:
    stripped = text.strip()
    if not stripped or set(stripped) - {"0", "1"}:
        raise OracleError(f"Bitstring must be a nonempty run of 0/1, got {text!r}")
    return tuple(int(char) for char in stripped)


def approximation_ratio(cut: float, c_max: float) -> float:
    """cut / c_max.

    Raises:
        OracleError: If ``c_max`` is not positive
    """
    if c_max <= 0:
        raise OracleError(f"C_max must be positive, got {c_max}")
    return cut / c_max
