"""Single-instance checkers for the inequality catalog.

Every margin is RHS - LHS of the inequality written as ``LHS <= RHS``.
"""

from dataclasses import dataclass
from fractions import Fraction
from typing import Optional, Sequence

from ..errors import VerifierInputError
from ..lorentz.rayleigh import DerivativeTable
from ..lorentz.verdict import Verdict
from ..polycore.multiindex import MultiIndex, add
from ..polycore.polynomial import HomPoly, evaluate, multilinear_form
from .constants import pr_constant, rkt_constant, rkt_optimal_constant

Vector = Sequence[Fraction]


def _nonnegative(v: Vector, name: str, n: int) -> tuple[Fraction, ...]:
    if len(v) != n:
        raise VerifierInputError(f"vector has length {len(v)}, expected {n}", name)
    v = tuple(Fraction(x) for x in v)
    if any(x < 0 for x in v):
        raise VerifierInputError("vector must lie in the nonnegative orthant", name)
    return v


def _vsum(*vectors: Vector) -> tuple[Fraction, ...]:
    return tuple(sum(components, Fraction(0)) for components in zip(*vectors))


@dataclass(frozen=True)
class RktInstance:
    f: HomPoly
    x: tuple[Fraction, ...]
    beta: MultiIndex
    gamma: MultiIndex

    def __post_init__(self):
        n = self.f.nvars
        object.__setattr__(self, "x", _nonnegative(self.x, "x", n))
        for name in ("beta", "gamma"):
            index = tuple(getattr(self, name))
            if len(index) != n or any(a < 0 for a in index):
                raise VerifierInputError(f"invalid multi-index {index}", name)
            object.__setattr__(self, name, index)
        if sum(self.beta) + sum(self.gamma) > self.f.degree:
            raise VerifierInputError(
                f"|beta + gamma| exceeds degree {self.f.degree}", "splitting")

    @property
    def alpha(self) -> MultiIndex:
        return add(self.beta, self.gamma)


def _rkt_verdict(inst: RktInstance, constant: Fraction,
                 table: Optional[DerivativeTable] = None) -> Verdict:
    if table is None:
        table = DerivativeTable(inst.f, inst.x)
    zero = (0,) * inst.f.nvars
    lhs = table[zero] * table[inst.alpha]
    rhs = constant * table[inst.beta] * table[inst.gamma]
    margin = rhs - lhs
    if margin < 0:
        return Verdict.failed(
            {"x": inst.x, "beta": inst.beta, "gamma": inst.gamma, "lhs": lhs, "rhs": rhs},
            margin=margin, constant=constant)
    return Verdict.passed(margin=margin)


def rkt_check(inst: RktInstance, table: Optional[DerivativeTable] = None) -> Verdict:
    """f(x) d^(b+g) f(x) <= rkt_constant * d^b f(x) d^g f(x)."""
    d = inst.f.degree
    return _rkt_verdict(inst, rkt_constant(d, sum(inst.beta), sum(inst.gamma)), table)


def rkt_optimal_check(inst: RktInstance, table: Optional[DerivativeTable] = None) -> Verdict:
    """Same inequality with the binomial constant that volume polynomials satisfy."""
    d = inst.f.degree
    return _rkt_verdict(inst, rkt_optimal_constant(d, sum(inst.beta), sum(inst.gamma)), table)


def pr_check(f: HomPoly, x: Vector, y: Vector, z: Vector) -> Verdict:
    """f(x) f(x+y+z) <= c_d f(x+y) f(x+z)."""
    n = f.nvars
    x, y, z = (_nonnegative(v, name, n) for v, name in ((x, "x"), (y, "y"), (z, "z")))
    lhs = evaluate(f, x) * evaluate(f, _vsum(x, y, z))
    rhs = pr_constant(f.degree) * evaluate(f, _vsum(x, y)) * evaluate(f, _vsum(x, z))
    margin = rhs - lhs
    if margin < 0:
        return Verdict.failed({"x": x, "y": y, "z": z, "lhs": lhs, "rhs": rhs}, margin=margin)
    return Verdict.passed(margin=margin)


def quasi_log_submodular_check(f: HomPoly, x: Vector, y: Vector, z: Vector) -> Verdict:
    """pr_check, additionally reporting the ratio f(x)f(x+y+z) / (f(x+y)f(x+z))."""
    verdict = pr_check(f, x, y, z)
    ratio = empirical_pr_ratio(f, x, y, z)
    details = {**verdict.details, "ratio": ratio, "constant": pr_constant(f.degree)}
    return Verdict(verdict.holds, verdict.witness, verdict.margin, verdict.checked, details)


def empirical_pr_ratio(f: HomPoly, x: Vector, y: Vector, z: Vector) -> Optional[Fraction]:
    n = f.nvars
    x, y, z = (_nonnegative(v, name, n) for v, name in ((x, "x"), (y, "y"), (z, "z")))
    denominator = evaluate(f, _vsum(x, y)) * evaluate(f, _vsum(x, z))
    if denominator == 0:
        return None
    return evaluate(f, x) * evaluate(f, _vsum(x, y, z)) / denominator


def supermodularity_check(f: HomPoly, x: Vector, y: Vector, z: Vector) -> Verdict:
    """f(x+y) + f(x+z) <= f(x+y+z) + f(x).

    Negative coefficients are accepted, so non-members can be checked too.
    """
    n = f.nvars
    x, y, z = (_nonnegative(v, name, n) for v, name in ((x, "x"), (y, "y"), (z, "z")))
    lhs = evaluate(f, _vsum(x, y)) + evaluate(f, _vsum(x, z))
    rhs = evaluate(f, _vsum(x, y, z)) + evaluate(f, x)
    margin = rhs - lhs
    if margin < 0:
        return Verdict.failed({"x": x, "y": y, "z": z, "lhs": lhs, "rhs": rhs}, margin=margin)
    return Verdict.passed(margin=margin)


def af_form_check(f: HomPoly, vectors: Sequence[Vector]) -> Verdict:
    """F(v1,v1,v3..) F(v2,v2,v3..) <= F(v1,v2,v3..)^2 for the complete homogeneous form F.

    v1 may have any sign; v2..vd must be nonnegative.
    """
    d = f.degree
    if d < 2:
        raise VerifierInputError(f"expected degree >= 2, got {d}", "poly")
    if len(vectors) != d:
        raise VerifierInputError(f"expected {d} vectors, got {len(vectors)}", "vectors")
    n = f.nvars
    if len(vectors[0]) != n:
        raise VerifierInputError(f"vector has length {len(vectors[0])}, expected {n}", "v1")
    v1 = tuple(Fraction(c) for c in vectors[0])
    rest = [_nonnegative(v, f"v{i + 2}", n) for i, v in enumerate(vectors[1:])]
    v2, tail = rest[0], rest[1:]

    mixed = multilinear_form(f, [v1, v2, *tail])
    first = multilinear_form(f, [v1, v1, *tail])
    second = multilinear_form(f, [v2, v2, *tail])
    lhs = first * second
    rhs = mixed * mixed
    margin = rhs - lhs
    if margin < 0:
        return Verdict.failed({"vectors": (v1, v2, *tail), "mixed": mixed,
                               "first": first, "second": second}, margin=margin)
    return Verdict.passed(margin=margin)
