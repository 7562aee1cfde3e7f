"""Parameter sharing: map each gate to the class whose angle it uses."""

from __future__ import annotations

from dataclasses import dataclass
from typing import Dict, List, Sequence, Tuple

from .types import ParameterScheme, SchemeVariant


@dataclass(frozen=True, slots=True)
class GateClassKey:
    """Everything a scheme may group a ZY gate by."""

    round: int
    tail: int
    head: int
    tail_out_degree: int
    head_in_degree: int

    def label(self, variant: SchemeVariant) -> str:
        if variant is SchemeVariant.UNIFORM:
            return f"r{self.round}"
        if variant is SchemeVariant.DEGREE_PAIR:
            return f"r{self.round}:({self.tail_out_degree},{self.head_in_degree})"
        if variant is SchemeVariant.HEAD_IN_DEGREE:
            return f"r{self.round}:in{self.head_in_degree}"
        return f"r{self.round}:{self.tail}->{self.head}"


def bind_parameters(
    variant: SchemeVariant, keys: Sequence[GateClassKey]
) -> ParameterScheme:
    """Number gate classes by first appearance in gate order."""
    return scheme_from_labels(variant, [key.label(variant) for key in keys])


def scheme_from_labels(
    variant: SchemeVariant, gate_labels: Sequence[str]
) -> ParameterScheme:
    """Gates with equal labels share a parameter; first appearance numbers them."""
    index: Dict[str, int] = {}
    binding: List[int] = []
    for label in gate_labels:
        binding.append(index.setdefault(label, len(index)))
    labels: Tuple[str, ...] = tuple(sorted(index, key=index.__getitem__))
    return ParameterScheme(variant=variant, binding=tuple(binding), labels=labels)
