"""Executable inequality catalog: rKT, Pluennecke-Ruzsa, supermodularity, AF."""

from .checkers import (
    RktInstance,
    af_form_check,
    empirical_pr_ratio,
    pr_check,
    quasi_log_submodular_check,
    rkt_check,
    rkt_optimal_check,
    supermodularity_check,
)
from .constants import intersection_form_constant, pr_constant, rkt_constant, rkt_optimal_constant
from .sweep import (
    SweepPlan,
    af_form_sweep,
    pr_ratio_sweep,
    pr_sweep,
    rkt_sweep,
    splitting_count,
    supermodularity_sweep,
    sweep_splittings,
)

__all__ = [
    "RktInstance",
    "SweepPlan",
    "af_form_check",
    "af_form_sweep",
    "empirical_pr_ratio",
    "intersection_form_constant",
    "pr_check",
    "pr_constant",
    "pr_ratio_sweep",
    "pr_sweep",
    "quasi_log_submodular_check",
    "rkt_check",
    "rkt_constant",
    "rkt_optimal_check",
    "rkt_optimal_constant",
    "rkt_sweep",
    "splitting_count",
    "supermodularity_check",
    "supermodularity_sweep",
    "sweep_splittings",
]
