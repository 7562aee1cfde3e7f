"""Local maximisation of the expected cut over circuit angles."""

from __future__ import annotations

import logging
import math
from dataclasses import dataclass, field
from typing import List, Optional, Sequence, Tuple

import numpy as np
from scipy.optimize import minimize

from ..ansatz import AnsatzCircuit
from ..seeding import substream
from ..simulator import Backend, TruncationMode, expected_cut, sample_bitstrings
from .config import OptimizationError, OptimizerConfig
from .cvar import cvar_objective

logger = logging.getLogger(__name__)

# c_max counts as reached within this margin
TARGET_MARGIN = 1e-9


@dataclass(frozen=True, slots=True)
class OptimizationResult:
    """Best angles seen during one local optimisation.

    ``iterations`` counts objective evaluations; ``trace`` is the objective
    value of each evaluation in order.
    """

    angles: Tuple[float, ...]
    best_value: float
    iterations: int
    trace: Tuple[float, ...]
    reached_target: bool
    budget_exhausted: bool


class _StopOptimization(Exception):
    pass


@dataclass
class _CountingObjective:
    """Evaluates, records and stops the optimiser at the target or budget."""

    circuit: AnsatzCircuit
    settings: OptimizerConfig
    backend: Backend
    mode: TruncationMode
    budget: int
    target: Optional[float]
    trace: List[float] = field(default_factory=list)
    best_value: float = -math.inf
    best_angles: Optional[np.ndarray] = None

    def value(self, angles: np.ndarray) -> float:
        if self.settings.objective == "cvar":
            samples = sample_bitstrings(
                self.circuit,
                angles,
                self.settings.shots,
                seed=substream(self.settings.seed, "cvar-shots"),
            )
            return cvar_objective([s.cut for s in samples], self.settings.confidence)
        return expected_cut(self.circuit, angles, self.backend, self.mode).expected_cut

    def __call__(self, x: np.ndarray) -> float:
        if len(self.trace) >= self.budget:
            raise _StopOptimization
        angles = np.array(x, dtype=float)
        value = self.value(angles)
        self.trace.append(value)
        if value > self.best_value:
            self.best_value, self.best_angles = value, angles
        if self.target is not None and value >= self.target - TARGET_MARGIN:
            raise _StopOptimization
        return -value


def maximize_cut(
    circuit: AnsatzCircuit,
    settings: OptimizerConfig,
    initial: Sequence[float],
    backend: Backend = Backend.STATEVECTOR,
    mode: TruncationMode = TruncationMode(),
    c_max: Optional[float] = None,
) -> OptimizationResult:
    """Maximise the expected cut (or its CVaR) starting from ``initial``.

    Angles are bounded to [-pi, pi]. The run stops early once the objective
    reaches ``c_max``; when the evaluation budget runs out the best angles
    seen so far are returned with ``budget_exhausted`` set.

    Raises:
        OptimizationError: If ``initial`` has the wrong length
    """
    start = np.asarray(initial, dtype=float).reshape(-1)
    if start.size != circuit.parameter_count:
        raise OptimizationError(
            f"Expected {circuit.parameter_count} initial angles, got {start.size}"
        )

    budget = settings.iteration_budget(circuit.parameter_count)
    objective = _CountingObjective(
        circuit=circuit,
        settings=settings,
        backend=backend,
        mode=mode,
        budget=budget,
        target=c_max,
    )
    bounds = [(-math.pi, math.pi)] * start.size
    options = {
        "nelder-mead": {
            "maxfev": budget,
            "xatol": settings.tolerance,
            "fatol": settings.tolerance,
        },
        "l-bfgs-b": {"maxfun": budget, "ftol": settings.tolerance},
        "slsqp": {"maxiter": budget, "ftol": settings.tolerance},
        "cobyla": {"maxiter": budget, "tol": settings.tolerance},
    }[settings.method]

    try:
        if start.size == 0:
            objective(start)
        else:
            minimize(
                objective,
                start,
                method=settings.method,
                bounds=bounds,
                options=options,
            )
    except _StopOptimization:
        pass

    assert objective.best_angles is not None
    reached = c_max is not None and objective.best_value >= c_max - TARGET_MARGIN
    logger.debug(
        "Optimisation finished after %d evaluations, best %.6f",
        len(objective.trace),
        objective.best_value,
    )
    return OptimizationResult(
        angles=tuple(float(a) for a in objective.best_angles),
        best_value=objective.best_value,
        iterations=len(objective.trace),
        trace=tuple(objective.trace),
        reached_target=reached,
        budget_exhausted=len(objective.trace) >= budget and not reached,
    )
