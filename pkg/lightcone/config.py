"""Load toolkit defaults from the bundled TOML file."""

from __future__ import annotations

import tomllib
from pathlib import Path
from typing import Any, Mapping

CONFIG_PATH = Path(__file__).parent / "assets" / "config" / "lightcone.toml"

try:
    with open(CONFIG_PATH, "rb") as config_file:
        _CONFIG = tomllib.load(config_file)
except FileNotFoundError as exc:
    raise FileNotFoundError(
        f"Lightcone config file not found: {CONFIG_PATH}\n"
        "The package requires lightcone.toml to run."
    ) from exc
except tomllib.TOMLDecodeError as exc:
    raise ValueError(
        f"Invalid TOML in lightcone config: {CONFIG_PATH}\nError: {exc}"
    ) from exc


def _section(name: str) -> Mapping[str, Any]:
    try:
        section = _CONFIG[name]
    except KeyError as exc:
        raise KeyError(f"Lightcone config missing required '{name}' section") from exc
    if not isinstance(section, dict):
        raise ValueError(f"Lightcone config '{name}' must be a table")
    return section


def _get_int(section: str, key: str) -> int:
    value = _section(section).get(key)
    # bool is an int subclass; reject it explicitly
    if not isinstance(value, int) or isinstance(value, bool):
        raise ValueError(f"Lightcone config '{section}.{key}' must be an integer")
    return value


def _get_float(section: str, key: str) -> float:
    value = _section(section).get(key)
    if isinstance(value, bool) or not isinstance(value, (float, int)):
        raise ValueError(f"Lightcone config '{section}.{key}' must be numeric")
    return float(value)


def _get_str(section: str, key: str) -> str:
    value = _section(section).get(key)
    if not isinstance(value, str):
        raise ValueError(f"Lightcone config '{section}.{key}' must be a string")
    return value


# Graphs
REGULAR_RETRY_CAP = _get_int("graphs", "regular_retry_cap")
CYCLE_CAP = _get_int("graphs", "cycle_cap")

# Simulator
MAX_QUBITS = _get_int("simulator", "max_qubits")
PAULI_TERM_CAP = _get_int("simulator", "pauli_term_cap")
PRUNE_TOLERANCE = _get_float("simulator", "prune_tolerance")
DEFAULT_SHOTS = _get_int("simulator", "default_shots")

# Oracle
ORACLE_MAX_NODES = _get_int("oracle", "max_nodes")
ORACLE_CHUNK_BITS = _get_int("oracle", "chunk_bits")

# Analysis
THETA_GRID_POINTS = _get_int("analysis", "theta_grid_points")
THETA_TOLERANCE = _get_float("analysis", "theta_tolerance")
THEOREM2_K_MAX = _get_int("analysis", "theorem2_k_max")
MINMAX_MAX_ROUNDS = _get_int("analysis", "minmax_max_rounds")

# Optimizer
OPTIMIZER_METHOD = _get_str("optimizer", "method")
ITERATIONS_PER_PARAMETER = _get_int("optimizer", "iterations_per_parameter")
OPTIMIZER_TOLERANCE = _get_float("optimizer", "tolerance")
RESTART_CAP = _get_int("optimizer", "restart_cap")
SUCCESS_TOLERANCE = _get_float("optimizer", "success_tolerance")
CVAR_CONFIDENCE = _get_float("optimizer", "cvar_confidence")
