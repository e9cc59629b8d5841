"""c-Rayleigh checks at sample points."""

from fractions import Fraction
from typing import Optional, Sequence

from ..errors import VerifierInputError
from ..polycore.multiindex import MultiIndex, add, multi_indices_up_to, unit
from ..polycore.polynomial import HomPoly, evaluate, partials_up_to
from .verdict import Verdict


def default_rayleigh_constant(degree: int) -> Fraction:
    """2(1 - 1/d), the constant every Lorentzian polynomial of degree d satisfies."""
    if degree < 1:
        raise VerifierInputError("degree must be positive", "degree")
    return 2 * (1 - Fraction(1, degree))


class DerivativeTable:
    """Values of every derivative d^alpha f at one point, computed lazily."""

    def __init__(self, f: HomPoly, x: Sequence[Fraction], max_order: Optional[int] = None):
        self.f = f
        self.x = tuple(Fraction(v) for v in x)
        order = f.degree if max_order is None else max_order
        self._partials = partials_up_to(f, order)
        self._values: dict[MultiIndex, Fraction] = {}

    def __getitem__(self, alpha: MultiIndex) -> Fraction:
        if alpha not in self._values:
            if sum(alpha) > self.f.degree:
                self._values[alpha] = Fraction(0)
            else:
                self._values[alpha] = evaluate(self._partials[alpha], self.x)
        return self._values[alpha]


def c_rayleigh_check(f: HomPoly, c: Fraction, points: Sequence[Sequence[Fraction]]) -> Verdict:
    """d^a f * d^(a+e_i+e_j) f <= c * d^(a+e_i) f * d^(a+e_j) f at every sample point,
    for every |a| <= d - 2 and every pair i, j."""
    c = Fraction(c)
    negatives = f.negative_terms()
    if negatives:
        raise VerifierInputError(
            f"coefficient {negatives[0][1]} of {list(negatives[0][0])} is negative", "poly")
    n = f.nvars
    checked = 0
    worst: Optional[Fraction] = None
    for index, x in enumerate(points):
        if len(x) != n:
            raise VerifierInputError(f"point has length {len(x)}, expected {n}", "points")
        if any(Fraction(v) < 0 for v in x):
            raise VerifierInputError(f"point {index} has a negative coordinate", "points")
        if f.degree < 2:
            continue
        table = DerivativeTable(f, x)
        for alpha in multi_indices_up_to(n, f.degree - 2):
            for i in range(n):
                alpha_i = add(alpha, unit(n, i))
                for j in range(i, n):
                    alpha_j = add(alpha, unit(n, j))
                    lhs = table[alpha] * table[add(alpha_i, unit(n, j))]
                    rhs = c * table[alpha_i] * table[alpha_j]
                    margin = rhs - lhs
                    checked += 1
                    worst = margin if worst is None else min(worst, margin)
                    if margin < 0:
                        return Verdict.failed(
                            {"point_index": index, "x": tuple(x), "alpha": alpha,
                             "i": i + 1, "j": j + 1, "lhs": lhs, "rhs": rhs},
                            margin=margin, checked=checked)
    return Verdict.passed(margin=worst, checked=checked, c=c)


def two_variable_one_rayleigh(f: HomPoly, points: Sequence[Sequence[Fraction]]) -> Verdict:
    """Lorentzian polynomials in at most two variables are 1-Rayleigh."""
    if f.nvars > 2:
        raise VerifierInputError(f"expected at most two variables, got {f.nvars}", "nvars")
    return c_rayleigh_check(f, Fraction(1), points)
