"""Partitions, Schur polynomials, mixed discriminants and Schur-type valuations."""

from .discriminant import (
    discriminant_polynomial,
    md_af_check,
    md_hodge_form,
    mixed_discriminant,
    mixed_discriminant_with,
    schur_md_form,
    symmetric_basis,
)
from .partitions import Partition, bounded_partitions, column, partitions_of
from .schur import (
    bialternant_schur,
    derived_schur,
    derived_schur_all,
    determinant_matches_bialternant,
    elementary_symmetric,
    schur,
    segre,
)
from .valuation import (
    SchurValuationSpec,
    schur_af_check,
    schur_valuation,
    schur_volume_polynomial,
)

__all__ = [
    "Partition",
    "SchurValuationSpec",
    "bialternant_schur",
    "bounded_partitions",
    "column",
    "derived_schur",
    "derived_schur_all",
    "determinant_matches_bialternant",
    "discriminant_polynomial",
    "elementary_symmetric",
    "md_af_check",
    "md_hodge_form",
    "mixed_discriminant",
    "mixed_discriminant_with",
    "partitions_of",
    "schur",
    "schur_af_check",
    "schur_md_form",
    "schur_valuation",
    "schur_volume_polynomial",
    "segre",
    "symmetric_basis",
]
