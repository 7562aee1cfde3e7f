"""Ground truth and classical baselines for MaxCut."""

from .brute_force import brute_force_maxcut
from .cut import (
    Bits,
    CutAssignment,
    OracleError,
    approximation_ratio,
    assignment,
    bits_to_string,
    check_bits,
    complement,
    cut_value,
    string_to_bits,
)
from .postprocess import PostprocessSummary, greedy_flip, postprocess_samples

__all__ = [
    "Bits",
    "CutAssignment",
    "OracleError",
    "PostprocessSummary",
    "approximation_ratio",
    "assignment",
    "bits_to_string",
    "brute_force_maxcut",
    "check_bits",
    "complement",
    "cut_value",
    "greedy_flip",
    "postprocess_samples",
    "string_to_bits",
]
