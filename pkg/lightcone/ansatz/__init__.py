"""Parameterised circuits: ZY_p (bipolar and light-cone), QAOA_p and R_Y."""

from .builders import build_bipolar_zy, build_lightcone_zy, build_qaoa, build_ry
from .coloring import color_count, greedy_edge_coloring, is_proper_coloring
from .factory import ANSATZ_KINDS, AnsatzFactory, AnsatzFactoryError
from .metrics import two_qubit_depth, variance_lower_bound
from .schemes import GateClassKey, bind_parameters, scheme_from_labels
from .serialization import circuit_from_json, circuit_to_dict, circuit_to_json
from .solution import ry_solution_angles, set_solution_angles
from .types import (
    AnsatzCircuit,
    AnsatzError,
    Gate,
    ParameterScheme,
    QaoaCostGate,
    QaoaMixerGate,
    RYGate,
    SchemeVariant,
    ZYGate,
)

__all__ = [
    "ANSATZ_KINDS",
    "AnsatzCircuit",
    "AnsatzError",
    "AnsatzFactory",
    "AnsatzFactoryError",
    "Gate",
    "GateClassKey",
    "ParameterScheme",
    "QaoaCostGate",
    "QaoaMixerGate",
    "RYGate",
    "SchemeVariant",
    "ZYGate",
    "bind_parameters",
    "build_bipolar_zy",
    "build_lightcone_zy",
    "build_qaoa",
    "build_ry",
    "circuit_from_json",
    "circuit_to_dict",
    "circuit_to_json",
    "color_count",
    "greedy_edge_coloring",
    "is_proper_coloring",
    "ry_solution_angles",
    "scheme_from_labels",
    "set_solution_angles",
    "two_qubit_depth",
    "variance_lower_bound",
]
