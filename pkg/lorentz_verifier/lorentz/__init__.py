"""Lorentzian membership: inertia, M-convex supports, Rayleigh checks."""

from .inertia import Inertia, inertia
from .membership import (
    af_coefficient_check,
    is_lorentzian,
    m_convex_support,
    quadratic_class_equiv,
    quadratic_in_L2,
)
from .rayleigh import (
    DerivativeTable,
    c_rayleigh_check,
    default_rayleigh_constant,
    two_variable_one_rayleigh,
)
from .verdict import Verdict

__all__ = [
    "DerivativeTable",
    "Inertia",
    "Verdict",
    "af_coefficient_check",
    "c_rayleigh_check",
    "default_rayleigh_constant",
    "inertia",
    "is_lorentzian",
    "m_convex_support",
    "quadratic_class_equiv",
    "quadratic_in_L2",
    "two_variable_one_rayleigh",
]
