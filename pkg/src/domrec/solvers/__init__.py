from .bb import bb_optimal, enumerate_minimal_dominating, parameter
from .brute import brute_force_minimal_dominating, brute_force_optimal
from .family import INFINITE, UNDEFINED, ParamValue, SetFamily, Special, format_value, is_finite

__all__ = [
    "bb_optimal", "brute_force_optimal", "brute_force_minimal_dominating",
    "enumerate_minimal_dominating", "parameter", "SetFamily", "ParamValue", "Special",
    "INFINITE", "UNDEFINED", "format_value", "is_finite",
]
