"""Result type shared by the guarantee computations."""

from __future__ import annotations

from dataclasses import dataclass, field
from typing import Any, Dict, Tuple

from ..errors import LightconeError


class AnalysisError(LightconeError):
    """Exception raised for out-of-range analysis inputs."""

    pass


@dataclass(frozen=True, slots=True)
class GuaranteeBound:
    """A worst-case approximation ratio with the angles that attain it.

    ``witness`` holds the worst-case parameters (degree ratios, cycle indices
    or source fraction) that the objective is evaluated at.
    """

    method: str
    alpha: float
    angles: Tuple[float, ...]
    witness: Dict[str, Any] = field(default_factory=dict)

    def to_dict(self) -> Dict[str, Any]:
        return {
            "method": self.method,
            "alpha": self.alpha,
            "angles": list(self.angles),
            "witness": dict(self.witness),
        }
