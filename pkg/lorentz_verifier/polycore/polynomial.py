"""Homogeneous polynomials with exact rational coefficients.

A ``HomPoly`` is a sparse map from exponent vectors to nonzero Fractions.
The zero polynomial has no terms and may carry any degree; it is allowed
as an operand of addition with a polynomial of any degree.
"""

from dataclasses import dataclass, field
from fractions import Fraction
from itertools import combinations
from math import factorial, perm
from typing import Mapping, Optional, Sequence

from ..errors import VerifierInputError
from .multiindex import MultiIndex, multi_indices_up_to, unit
from .rational import Vector, parse_rat
from .symmatrix import SymMatrix


@dataclass(frozen=True, eq=False)
class HomPoly:
    nvars: int
    degree: int
    terms: Mapping[MultiIndex, Fraction] = field(default_factory=dict)

    def __post_init__(self):
        if self.nvars < 1:
            raise VerifierInputError("polynomial needs at least one variable", "nvars")
        if self.degree < 0:
            raise VerifierInputError("degree must be nonnegative", "degree")
        clean: dict[MultiIndex, Fraction] = {}
        for exp, coef in self.terms.items():
            exp = tuple(int(e) for e in exp)
            if len(exp) != self.nvars:
                raise VerifierInputError(
                    f"exponent {exp} has length {len(exp)}, expected {self.nvars}", "terms")
            if any(e < 0 for e in exp):
                raise VerifierInputError(f"negative exponent in {exp}", "terms")
            if sum(exp) != self.degree:
                raise VerifierInputError(
                    f"exponent {exp} has total degree {sum(exp)}, expected {self.degree}", "terms")
            coef = parse_rat(coef, "coef")
            if coef:
                clean[exp] = clean.get(exp, Fraction(0)) + coef
        object.__setattr__(self, "terms", {e: c for e, c in clean.items() if c})

    # construction

    @classmethod
    def from_terms(cls, nvars: int, terms: Mapping[MultiIndex, object],
                   degree: Optional[int] = None) -> "HomPoly":
        """Build from a term map, inferring the degree from the first nonzero term."""
        if degree is None:
            nonzero = [e for e, c in terms.items() if parse_rat(c, "coef")]
            degree = sum(nonzero[0]) if nonzero else 0
        return cls(nvars, degree, dict(terms))

    @classmethod
    def zero(cls, nvars: int, degree: int = 0) -> "HomPoly":
        return cls(nvars, degree, {})

    @classmethod
    def constant(cls, nvars: int, value: object) -> "HomPoly":
        return cls(nvars, 0, {(0,) * nvars: parse_rat(value)})

    @classmethod
    def variable(cls, nvars: int, i: int) -> "HomPoly":
        return cls(nvars, 1, {unit(nvars, i): Fraction(1)})

    @classmethod
    def linear_form(cls, coefficients: Sequence[object]) -> "HomPoly":
        nvars = len(coefficients)
        return cls(nvars, 1, {unit(nvars, i): parse_rat(c) for i, c in enumerate(coefficients)})

    # inspection

    @property
    def is_zero(self) -> bool:
        return not self.terms

    @property
    def support(self) -> frozenset[MultiIndex]:
        return frozenset(self.terms)

    def coefficient(self, exp: Sequence[int]) -> Fraction:
        return self.terms.get(tuple(exp), Fraction(0))

    def negative_terms(self) -> list[tuple[MultiIndex, Fraction]]:
        return sorted(((e, c) for e, c in self.terms.items() if c < 0), reverse=True)

    @property
    def has_nonnegative_coefficients(self) -> bool:
        return all(c >= 0 for c in self.terms.values())

    def sorted_terms(self) -> list[tuple[MultiIndex, Fraction]]:
        """Terms in descending lexicographic exponent order."""
        return sorted(self.terms.items(), reverse=True)

    # arithmetic

    def _check_compatible(self, other: "HomPoly") -> int:
        if self.nvars != other.nvars:
            raise VerifierInputError(
                f"variable count mismatch: {self.nvars} vs {other.nvars}", "nvars")
        if self.is_zero:
            return other.degree
        if other.is_zero or self.degree == other.degree:
            return self.degree
        raise VerifierInputError(
            f"cannot add polynomials of degree {self.degree} and {other.degree}", "degree")

    def __add__(self, other: "HomPoly") -> "HomPoly":
        if not isinstance(other, HomPoly):
            return NotImplemented
        degree = self._check_compatible(other)
        terms = dict(self.terms)
        for exp, coef in other.terms.items():
            terms[exp] = terms.get(exp, Fraction(0)) + coef
        return HomPoly(self.nvars, degree, terms)

    def __neg__(self) -> "HomPoly":
        return HomPoly(self.nvars, self.degree, {e: -c for e, c in self.terms.items()})

    def __sub__(self, other: "HomPoly") -> "HomPoly":
        if not isinstance(other, HomPoly):
            return NotImplemented
        return self + (-other)

    def scale(self, factor: object) -> "HomPoly":
        factor = parse_rat(factor, "factor")
        return HomPoly(self.nvars, self.degree, {e: c * factor for e, c in self.terms.items()})

    def __mul__(self, other: object) -> "HomPoly":
        if isinstance(other, HomPoly):
            if self.nvars != other.nvars:
                raise VerifierInputError(
                    f"variable count mismatch: {self.nvars} vs {other.nvars}", "nvars")
            terms: dict[MultiIndex, Fraction] = {}
            for e1, c1 in self.terms.items():
                for e2, c2 in other.terms.items():
                    exp = tuple(a + b for a, b in zip(e1, e2))
                    terms[exp] = terms.get(exp, Fraction(0)) + c1 * c2
            return HomPoly(self.nvars, self.degree + other.degree, terms)
        if isinstance(other, (int, Fraction)) and not isinstance(other, bool):
            return self.scale(other)
        return NotImplemented

    __rmul__ = __mul__

    def __pow__(self, exponent: int) -> "HomPoly":
        if exponent < 0:
            raise VerifierInputError("negative power of a polynomial", "exponent")
        result = HomPoly.constant(self.nvars, 1)
        for _ in range(exponent):
            result = result * self
        return result

    def __eq__(self, other: object) -> bool:
        if not isinstance(other, HomPoly):
            return NotImplemented
        if self.nvars != other.nvars or self.terms != other.terms:
            return False
        return self.is_zero or self.degree == other.degree

    def __hash__(self) -> int:
        return hash((self.nvars, frozenset(self.terms.items())))

    def __repr__(self) -> str:
        if self.is_zero:
            return f"HomPoly(0, nvars={self.nvars})"
        parts = []
        for exp, coef in self.sorted_terms():
            monomial = "*".join(
                f"x{i + 1}" if e == 1 else f"x{i + 1}^{e}" for i, e in enumerate(exp) if e)
            parts.append(f"{coef}" if not monomial else f"{coef}*{monomial}")
        return f"HomPoly({' + '.join(parts)})"

    # calculus

    def evaluate(self, x: Sequence[Fraction]) -> Fraction:
        return evaluate(self, x)

    def partial(self, alpha: Sequence[int]) -> "HomPoly":
        return partial(self, alpha)


def _check_point(f: HomPoly, x: Sequence[Fraction]) -> None:
    if len(x) != f.nvars:
        raise VerifierInputError(f"point has length {len(x)}, expected {f.nvars}", "point")


def evaluate(f: HomPoly, x: Sequence[Fraction]) -> Fraction:
    """Exact value of f at x."""
    _check_point(f, x)
    total = Fraction(0)
    for exp, coef in f.terms.items():
        term = coef
        for xi, e in zip(x, exp):
            if e:
                term *= Fraction(xi) ** e
        total += term
    return total


def partial(f: HomPoly, alpha: Sequence[int]) -> HomPoly:
    """The derivative d^alpha f. Over-differentiation gives the zero polynomial."""
    alpha = tuple(alpha)
    if len(alpha) != f.nvars or any(a < 0 for a in alpha):
        raise VerifierInputError(f"invalid multi-index {alpha}", "alpha")
    order = sum(alpha)
    if order > f.degree:
        return HomPoly.zero(f.nvars, 0)
    terms: dict[MultiIndex, Fraction] = {}
    for exp, coef in f.terms.items():
        if all(e >= a for e, a in zip(exp, alpha)):
            factor = 1
            for e, a in zip(exp, alpha):
                factor *= perm(e, a)
            terms[tuple(e - a for e, a in zip(exp, alpha))] = coef * factor
    return HomPoly(f.nvars, f.degree - order, terms)


def partials_up_to(f: HomPoly, order: int) -> dict[MultiIndex, HomPoly]:
    """All derivatives d^alpha f with ``|alpha| <= order``, keyed by alpha."""
    return {alpha: partial(f, alpha) for alpha in multi_indices_up_to(f.nvars, order)}


def gradient_at(f: HomPoly, x: Sequence[Fraction]) -> Vector:
    return tuple(evaluate(partial(f, unit(f.nvars, i)), x) for i in range(f.nvars))


def hessian_at(f: HomPoly, x: Sequence[Fraction]) -> SymMatrix:
    """Hessian matrix of f at x. Requires degree >= 2."""
    if f.degree < 2 and not f.is_zero:
        raise VerifierInputError(f"Hessian needs degree >= 2, got {f.degree}", "degree")
    _check_point(f, x)
    n = f.nvars
    hessian = [[Fraction(0)] * n for _ in range(n)]
    for i in range(n):
        for j in range(i, n):
            alpha = tuple(int(k == i) + int(k == j) for k in range(n))
            value = evaluate(partial(f, alpha), x)
            hessian[i][j] = hessian[j][i] = value
    return SymMatrix.from_rows(hessian)


def multilinear_form(f: HomPoly, vectors: Sequence[Sequence[Fraction]]) -> Fraction:
    """The symmetric multilinear form F with F(x, ..., x) = f(x), by polarization.

    F(v1, ..., vd) = (1/d!) * sum over nonempty S of (-1)^(d-|S|) f(sum of v_i, i in S)
    """
    d = f.degree
    if len(vectors) != d:
        raise VerifierInputError(f"expected {d} vectors, got {len(vectors)}", "vectors")
    for v in vectors:
        _check_point(f, v)
    if d == 0:
        return f.coefficient((0,) * f.nvars)
    total = Fraction(0)
    for size in range(1, d + 1):
        sign = -1 if (d - size) % 2 else 1
        for subset in combinations(range(d), size):
            point = [sum((Fraction(vectors[i][k]) for i in subset), Fraction(0))
                     for k in range(f.nvars)]
            total += sign * evaluate(f, point)
    return total / factorial(d)


def substitute_linear(f: HomPoly, matrix: Sequence[Sequence[Fraction]], new_nvars: int) -> HomPoly:
    """g(y) = f(L y) for an ``nvars x new_nvars`` matrix L."""
    if len(matrix) != f.nvars or any(len(row) != new_nvars for row in matrix):
        raise VerifierInputError(
            f"substitution matrix must be {f.nvars}x{new_nvars}", "matrix")
    images = [HomPoly.linear_form(row) if any(row) else HomPoly.zero(new_nvars, 1)
              for row in matrix]
    powers: dict[tuple[int, int], HomPoly] = {}

    def power(i: int, e: int) -> HomPoly:
        if (i, e) not in powers:
            powers[(i, e)] = images[i] ** e
        return powers[(i, e)]

    result = HomPoly.zero(new_nvars, f.degree)
    for exp, coef in f.terms.items():
        term = HomPoly.constant(new_nvars, coef)
        for i, e in enumerate(exp):
            if e:
                term = term * power(i, e)
        result = result + term
    if result.is_zero:
        return HomPoly.zero(new_nvars, f.degree)
    return result
