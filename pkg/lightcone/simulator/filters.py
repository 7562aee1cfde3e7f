"""Term filters applied after every gate of Pauli back-propagation."""

from __future__ import annotations

from abc import ABC, abstractmethod
from dataclasses import dataclass, field
from typing import Dict, List, Optional, Tuple

from .. import config
from .types import TruncationKind, TruncationMode

# (x mask, z mask) of a Pauli string
PauliKey = Tuple[int, int]


@dataclass
class PropagationContext:
    """Carries the live Pauli sum through the filter pipeline.

    ``dropped`` accumulates the number of terms removed by each filter class.
    """

    terms: Dict[PauliKey, float]
    gate_position: int = 0
    dropped: Dict[str, int] = field(default_factory=dict)

    def discard(self, reason: str, keep: Dict[PauliKey, float]) -> None:
        removed = len(self.terms) - len(keep)
        if removed:
            self.dropped[reason] = self.dropped.get(reason, 0) + removed
        self.terms = keep


class TermFilter(ABC):
    """Base class for processors that remove terms from the Pauli sum."""

    @abstractmethod
    def process(self, context: PropagationContext) -> PropagationContext:
        """Remove terms from ``context.terms``."""

    def is_enabled(self) -> bool:
        return True


class PruneFilter(TermFilter):
    """Drop floating-point noise below the prune tolerance."""

    def __init__(self, tolerance: float | None = None) -> None:
        self.tolerance = config.PRUNE_TOLERANCE if tolerance is None else tolerance

    def process(self, context: PropagationContext) -> PropagationContext:
        keep = {k: c for k, c in context.terms.items() if abs(c) >= self.tolerance}
        context.discard("prune", keep)
        return context


class WeightFilter(TermFilter):
    """Drop strings with more than ``max_weight`` non-identity letters."""

    def __init__(self, max_weight: Optional[int]) -> None:
        self.max_weight = max_weight

    def is_enabled(self) -> bool:
        return self.max_weight is not None

    def process(self, context: PropagationContext) -> PropagationContext:
        assert self.max_weight is not None
        limit = self.max_weight
        keep = {
            (x, z): c
            for (x, z), c in context.terms.items()
            if (x | z).bit_count() <= limit
        }
        context.discard("weight", keep)
        return context


class CoefficientFilter(TermFilter):
    """Drop terms whose coefficient magnitude is below ``threshold``."""

    def __init__(self, threshold: Optional[float]) -> None:
        self.threshold = threshold

    def is_enabled(self) -> bool:
        return self.threshold is not None

    def process(self, context: PropagationContext) -> PropagationContext:
        assert self.threshold is not None
        limit = self.threshold
        keep = {k: c for k, c in context.terms.items() if abs(c) >= limit}
        context.discard("coefficient", keep)
        return context


class TermFilterPipeline:
    """Runs the enabled term filters in order."""

    def __init__(self, processors: Optional[List[TermFilter]] = None) -> None:
        self.processors: List[TermFilter] = (
            processors if processors is not None else [PruneFilter()]
        )

    @classmethod
    def for_mode(cls, mode: TruncationMode) -> TermFilterPipeline:
        """Prune always; add the weight or coefficient filter the mode asks for."""
        max_weight = int(mode.value) if mode.kind is TruncationKind.WEIGHT else None
        threshold = mode.value if mode.kind is TruncationKind.COEFFICIENT else None
        return cls(
            [PruneFilter(), WeightFilter(max_weight), CoefficientFilter(threshold)]
        )

    def process(self, context: PropagationContext) -> PropagationContext:
        for processor in self.processors:
            if processor.is_enabled():
                context = processor.process(context)
        return context
