"""Numerical dimension of convex bodies and its polymatroid rank function."""

from .ground import GroundSet, affine_dim, minkowski_total, nd, nd_by_dimension
from .polymatroid import (
    MAX_GROUND_SET,
    RankOracle,
    check_polymatroid,
    is_matroid,
    rank_vector,
    submodularity_triple_check,
)

__all__ = [
    "GroundSet",
    "MAX_GROUND_SET",
    "RankOracle",
    "affine_dim",
    "check_polymatroid",
    "is_matroid",
    "minkowski_total",
    "nd",
    "nd_by_dimension",
    "rank_vector",
    "submodularity_triple_check",
]
