"""Schur polynomials as determinants of elementary symmetric polynomials.

``schur(lam, e)`` expands det[sigma_{lam_i - i + j}] over the e variables,
with sigma_k = 0 outside [0, e]. The bialternant a_{mu + delta} / a_delta of
the conjugate partition is computed separately with sympy and only ever
used as a cross-check.
"""

from fractions import Fraction
from functools import lru_cache
from itertools import combinations
from typing import Sequence

import sympy

from ..errors import VerifierInputError
from ..lorentz.verdict import Verdict
from ..polycore.polynomial import HomPoly, substitute_linear
from .partitions import Partition, column


@lru_cache(maxsize=256)
def elementary_symmetric(k: int, e: int) -> HomPoly:
    """sigma_k(x_1, ..., x_e)."""
    if e < 1:
        raise VerifierInputError("e must be at least 1", "e")
    if k < 0 or k > e:
        return HomPoly.zero(e, max(k, 0))
    terms = {}
    for chosen in combinations(range(e), k):
        terms[tuple(int(i in chosen) for i in range(e))] = 1
    return HomPoly(e, k, terms)


def _determinant(entries: list[list[HomPoly]], nvars: int, degree: int) -> HomPoly:
    """Laplace expansion along the first row, memoized on the remaining columns."""
    size = len(entries)
    memo: dict[tuple[int, ...], HomPoly] = {}

    def minor(row: int, cols: tuple[int, ...]) -> HomPoly:
        if row == size:
            return HomPoly.constant(nvars, 1)
        if cols in memo:
            return memo[cols]
        total = HomPoly.zero(nvars)
        for position, col in enumerate(cols):
            entry = entries[row][col]
            if entry.is_zero:
                continue
            rest = minor(row + 1, cols[:position] + cols[position + 1:])
            if rest.is_zero:
                continue
            term = entry * rest
            total = total + (term if position % 2 == 0 else -term)
        memo[cols] = total
        return total

    result = minor(0, tuple(range(size)))
    return HomPoly.zero(nvars, degree) if result.is_zero else result


def _sympy_fraction(value) -> Fraction:
    rational = sympy.Rational(value)
    return Fraction(int(rational.p), int(rational.q))


def schur(lam: Partition, e: int | None = None) -> HomPoly:
    """s_lam(x_1, ..., x_e) = det[sigma_{lam_i - i + j}], a form of degree |lam|."""
    e = lam.e if e is None else e
    if lam.parts and lam.parts[0] > e:
        raise VerifierInputError(f"largest part {lam.parts[0]} exceeds e = {e}", "e")
    size = lam.length
    if size == 0:
        return HomPoly.constant(e, 1)
    entries = [[elementary_symmetric(lam.parts[i] - i + j, e) for j in range(size)]
               for i in range(size)]
    return _determinant(entries, e, lam.size)


def segre(k: int, e: int) -> HomPoly:
    """The Schur polynomial of the column (1^k)."""
    return schur(column(k, e), e)


def bialternant_schur(parts: Sequence[int], e: int) -> HomPoly:
    """s_mu(x_1, ..., x_e) as a_{mu + delta} / a_delta.

    Zero when mu has more than e nonzero parts.
    """
    mu = [p for p in parts if p]
    degree = sum(mu)
    if len(mu) > e:
        return HomPoly.zero(e, degree)
    xs = sympy.symbols(f"x1:{e + 1}")
    padded = mu + [0] * (e - len(mu))
    numerator = sympy.Matrix(e, e, lambda i, j: xs[i] ** (padded[j] + e - 1 - j)).det()
    denominator = sympy.Matrix(e, e, lambda i, j: xs[i] ** (e - 1 - j)).det()
    quotient, remainder = sympy.div(sympy.expand(numerator), sympy.expand(denominator), *xs)
    if remainder != 0:
        raise ArithmeticError(f"bialternant of {tuple(mu)} did not divide exactly")
    poly = sympy.Poly(quotient, *xs)
    terms = {tuple(int(a) for a in monom): _sympy_fraction(coef) for monom, coef in poly.terms()}
    return HomPoly(e, degree, terms)


def determinant_matches_bialternant(lam: Partition, e: int | None = None) -> Verdict:
    """Compare the determinant with the bialternant of the conjugate partition."""
    e = lam.e if e is None else e
    determinant = schur(lam, e)
    oracle = bialternant_schur(lam.conjugate(), e)
    difference = determinant - oracle
    if difference.is_zero:
        return Verdict.passed(partition=list(lam.parts), e=e)
    return Verdict.failed({"partition": list(lam.parts), "e": e,
                           "difference": repr(difference)})


def derived_schur(lam: Partition, e: int | None, i: int) -> HomPoly:
    """The coefficient of t^i in s_lam(x_1 + t, ..., x_e + t)."""
    e = lam.e if e is None else e
    if not 0 <= i <= lam.size:
        raise VerifierInputError(f"i must lie in [0, {lam.size}], got {i}", "i")
    base = schur(lam, e)
    if i == 0:
        return base
    shift = [[1 if c == r or c == e else 0 for c in range(e + 1)] for r in range(e)]
    shifted = substitute_linear(base, shift, e + 1)
    terms = {exp[:e]: coef for exp, coef in shifted.terms.items() if exp[e] == i}
    return HomPoly(e, lam.size - i, terms)


def derived_schur_all(lam: Partition, e: int | None = None) -> list[HomPoly]:
    """[s^(0), s^(1), ..., s^(|lam|)]."""
    return [derived_schur(lam, e, i) for i in range(lam.size + 1)]
