"""Variational optimisation, CVaR and the time-to-solution harness."""

from .config import INITS, METHODS, OBJECTIVES, OptimizationError, OptimizerConfig
from .cvar import cvar_objective
from .maximize import OptimizationResult, maximize_cut
from .tts import (
    ScalingFit,
    TTSRecord,
    initial_angles,
    multistart_tts,
    run_tts_ensemble,
    scaling_fit,
    summarize_tts,
)

__all__ = [
    "INITS",
    "METHODS",
    "OBJECTIVES",
    "OptimizationError",
    "OptimizationResult",
    "OptimizerConfig",
    "ScalingFit",
    "TTSRecord",
    "cvar_objective",
    "initial_angles",
    "maximize_cut",
    "multistart_tts",
    "run_tts_ensemble",
    "scaling_fit",
    "summarize_tts",
]
