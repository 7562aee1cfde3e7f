"""Optimizer settings."""

from __future__ import annotations

from dataclasses import dataclass
from typing import Optional

from .. import config
from ..errors import LightconeError

METHODS = ("nelder-mead", "l-bfgs-b", "slsqp", "cobyla")
INITS = ("uniform", "small")
OBJECTIVES = ("expectation", "cvar")


class OptimizationError(LightconeError):
    """Exception raised for invalid optimizer settings or inputs."""

    pass


@dataclass(frozen=True, slots=True)
class OptimizerConfig:
    """How one local optimisation and the restarts around it run.

    ``max_iterations`` counts objective evaluations; None means
    ``iterations_per_parameter`` times the parameter count.
    """

    method: str = config.OPTIMIZER_METHOD
    max_iterations: Optional[int] = None
    tolerance: float = config.OPTIMIZER_TOLERANCE
    init: str = "uniform"
    objective: str = "expectation"
    confidence: float = config.CVAR_CONFIDENCE
    shots: int = config.DEFAULT_SHOTS
    restart_cap: int = config.RESTART_CAP
    success_tolerance: float = config.SUCCESS_TOLERANCE
    seed: int = 0

    def __post_init__(self) -> None:
        if self.method not in METHODS:
            raise OptimizationError(
                f"Unknown optimizer '{self.method}' "
                f"(expected one of {', '.join(METHODS)})"
            )
        if self.init not in INITS:
            raise OptimizationError(
                f"Unknown init '{self.init}' (expected uniform or small)"
            )
        if self.objective not in OBJECTIVES:
            raise OptimizationError(
                f"Unknown objective '{self.objective}' (expected expectation or cvar)"
            )
        if self.max_iterations is not None and self.max_iterations < 1:
            raise OptimizationError(
                f"max_iterations must be at least 1, got {self.max_iterations}"
            )
        if not self.tolerance > 0:
            raise OptimizationError(f"tolerance must be positive, got {self.tolerance}")
        if not 0 < self.confidence <= 1:
            raise OptimizationError(
                f"confidence must lie in (0, 1], got {self.confidence}"
            )
        if self.restart_cap < 1:
            raise OptimizationError(
                f"restart_cap must be at least 1, got {self.restart_cap}"
            )
        if self.shots < 1:
            raise OptimizationError(f"shots must be at least 1, got {self.shots}")

    def iteration_budget(self, parameter_count: int) -> int:
        if self.max_iterations is not None:
            return self.max_iterations
        return config.ITERATIONS_PER_PARAMETER * max(parameter_count, 1)
