"""Exact polynomial and matrix core."""

from .multiindex import MultiIndex, compositions, multi_indices_up_to
from .polynomial import (
    HomPoly,
    evaluate,
    gradient_at,
    hessian_at,
    multilinear_form,
    partial,
    partials_up_to,
    substitute_linear,
)
from .rational import Rat, format_rat, parse_rat
from .symmatrix import SymMatrix

__all__ = [
    "HomPoly",
    "MultiIndex",
    "Rat",
    "SymMatrix",
    "compositions",
    "evaluate",
    "format_rat",
    "gradient_at",
    "hessian_at",
    "multi_indices_up_to",
    "multilinear_form",
    "parse_rat",
    "partial",
    "partials_up_to",
    "substitute_linear",
]
