"""Conditional value at risk of sampled cuts."""

from __future__ import annotations

import math
from typing import Sequence

import numpy as np

from .config import OptimizationError


def cvar_objective(cuts: Sequence[float], confidence: float) -> float:
    """Mean of the best ceil(confidence * n) cut values.

    Raises:
        OptimizationError: For an empty sample or confidence outside (0, 1]
    """
    if len(cuts) == 0:
        raise OptimizationError("CVaR needs at least one sample")
    if not 0 < confidence <= 1:
        raise OptimizationError(f"Confidence must lie in (0, 1], got {confidence}")
    ordered = np.sort(np.asarray(cuts, dtype=float))[::-1]
    count = max(1, math.ceil(confidence * ordered.size))
    return float(ordered[:count].mean())
