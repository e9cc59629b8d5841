"""Exact rational scalars and the bridge to sympy's domain matrices."""

from fractions import Fraction
from math import lcm
from typing import Any, Iterable, Sequence, Union

from sympy import QQ, ZZ
from sympy.polys.matrices import DomainMatrix

from ..errors import VerifierInputError

Rat = Fraction
RatLike = Union[Fraction, int, str]
Vector = tuple[Fraction, ...]


def parse_rat(value: Any, field: str = "value") -> Fraction:
    """Parse ``"p/q"``, ``"p"`` or an integer into a Fraction.

    Floats are rejected: every input has to be exact.
    """
    if isinstance(value, bool):
        raise VerifierInputError(f"boolean is not a rational: {value!r}", field)
    if isinstance(value, Fraction):
        return value
    if isinstance(value, int):
        return Fraction(value)
    if isinstance(value, str):
        text = value.strip()
        if "." in text or "e" in text.lower():
            raise VerifierInputError(f"expected p/q, got {value!r}", field)
        try:
            return Fraction(text)
        except (ValueError, ZeroDivisionError) as e:
            raise VerifierInputError(f"invalid rational {value!r}: {e}", field)
    raise VerifierInputError(f"expected p/q string or integer, got {type(value).__name__}", field)


def format_rat(value: Fraction) -> str:
    value = Fraction(value)
    if value.denominator == 1:
        return str(value.numerator)
    return f"{value.numerator}/{value.denominator}"


def parse_vector(values: Any, field: str = "vector", length: int | None = None) -> Vector:
    if not isinstance(values, (list, tuple)):
        raise VerifierInputError("expected a list of rationals", field)
    vector = tuple(parse_rat(v, field) for v in values)
    if length is not None and len(vector) != length:
        raise VerifierInputError(f"expected length {length}, got {len(vector)}", field)
    return vector


def from_domain(value: Any) -> Fraction:
    """Convert a QQ/ZZ domain element (python or gmpy flavour) to a Fraction."""
    if hasattr(value, "numerator"):
        return Fraction(int(value.numerator), int(value.denominator))
    return Fraction(int(value))


def to_domain_matrix(rows: Sequence[Sequence[Fraction]]) -> DomainMatrix:
    n_rows = len(rows)
    n_cols = len(rows[0]) if n_rows else 0
    entries = [[QQ(int(Fraction(x).numerator), int(Fraction(x).denominator)) for x in row]
               for row in rows]
    return DomainMatrix(entries, (n_rows, n_cols), QQ)


def integer_domain_matrix(rows: Sequence[Sequence[int]]) -> DomainMatrix:
    n_rows = len(rows)
    n_cols = len(rows[0]) if n_rows else 0
    return DomainMatrix([[ZZ(int(x)) for x in row] for row in rows], (n_rows, n_cols), ZZ)


def exact_det(rows: Sequence[Sequence[Fraction]]) -> Fraction:
    if not rows:
        return Fraction(1)
    if any(len(row) != len(rows) for row in rows):
        raise VerifierInputError("determinant of a non-square matrix")
    return from_domain(to_domain_matrix(rows).det())


def pivot_columns(rows: Sequence[Sequence[Fraction]]) -> tuple[int, ...]:
    """Columns of a maximal independent column set (pivots of the RREF)."""
    if not rows or not rows[0]:
        return ()
    _, pivots = to_domain_matrix(rows).rref()
    return tuple(int(p) for p in pivots)


def common_denominator(values: Iterable[Fraction]) -> int:
    den = 1
    for value in values:
        den = lcm(den, Fraction(value).denominator)
    return den


def integer_rank(rows: Sequence[Sequence[int]]) -> int:
    if not rows or not rows[0]:
        return 0
    return int(integer_domain_matrix(rows).convert_to(QQ).rank())


def solve_exact(rows: Sequence[Sequence[Fraction]], rhs: Sequence[Fraction]) -> list[Fraction]:
    """Solve a nonsingular square system over QQ."""
    if len(rows) != len(rhs):
        raise VerifierInputError("system and right-hand side differ in length")
    solution = to_domain_matrix(rows).lu_solve(to_domain_matrix([[b] for b in rhs]))
    column = solution.to_Matrix()
    return [Fraction(int(column[i, 0].p), int(column[i, 0].q)) for i in range(len(rhs))]
