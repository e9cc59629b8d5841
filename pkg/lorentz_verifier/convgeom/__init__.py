"""Exact polytope geometry: hulls, Minkowski sums, mixed volumes."""

from .hull import HullResult, affine_dimension, exact_hull
from .inequalities import (
    giannopoulos_check,
    one_rayleigh_counterexample_report,
    pr_convex_ratio,
    projection_volumes,
    quermass_polytopal_check,
    rkt_convex_check,
)
from .mixed import (
    MinkowskiCombiner,
    MixedVolumeSpec,
    mixed_volume,
    mixed_volume_of,
    volume_polynomial,
    volume_polynomial_by_polarization,
)
from .polytope import (
    Polytope,
    bipyramid,
    box,
    combination,
    cross_polytope,
    cube,
    minkowski_sum,
    point,
    project,
    scale,
    segment,
    simplex,
    translate,
    unit_segment,
    volume,
)

__all__ = [
    "HullResult",
    "MinkowskiCombiner",
    "MixedVolumeSpec",
    "Polytope",
    "affine_dimension",
    "bipyramid",
    "box",
    "combination",
    "cross_polytope",
    "cube",
    "exact_hull",
    "giannopoulos_check",
    "minkowski_sum",
    "mixed_volume",
    "mixed_volume_of",
    "one_rayleigh_counterexample_report",
    "point",
    "pr_convex_ratio",
    "project",
    "projection_volumes",
    "quermass_polytopal_check",
    "rkt_convex_check",
    "scale",
    "segment",
    "simplex",
    "translate",
    "unit_segment",
    "volume",
    "volume_polynomial",
    "volume_polynomial_by_polarization",
]
