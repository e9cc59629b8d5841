"""Membership tests for the Lorentzian class.

Variable indices in witnesses are 1-based, matching how polynomials are
written (x1, x2, ...).
"""

from fractions import Fraction
from typing import Iterable, Sequence

from ..errors import PreconditionError, VerifierInputError
from ..polycore.multiindex import MultiIndex, add, compositions, sub, unit
from ..polycore.polynomial import HomPoly, evaluate, gradient_at, hessian_at, partial
from ..verifier_logging import get_logger
from .inertia import inertia
from .verdict import Verdict

logger = get_logger()


def m_convex_support(support: Iterable[MultiIndex]) -> Verdict:
    """Exchange property: for a, b in S and a_i < b_i there is j with
    b_j < a_j such that a + e_i - e_j and b - e_i + e_j are both in S."""
    points = sorted(set(tuple(s) for s in support), reverse=True)
    if not points:
        return Verdict.passed(checked=0)
    n = len(points[0])
    degree = sum(points[0])
    if any(len(p) != n or sum(p) != degree for p in points):
        raise VerifierInputError("support points must share length and total degree", "support")
    members = set(points)
    checked = 0
    for alpha in points:
        for beta in points:
            for i in range(n):
                if alpha[i] >= beta[i]:
                    continue
                checked += 1
                e_i = unit(n, i)
                exchanged = any(
                    beta[j] < alpha[j]
                    and sub(add(alpha, e_i), unit(n, j)) in members
                    and add(sub(beta, e_i), unit(n, j)) in members
                    for j in range(n)
                )
                if not exchanged:
                    return Verdict.failed(
                        {"alpha": alpha, "beta": beta, "i": i + 1}, checked=checked)
    return Verdict.passed(checked=checked)


def _require_nonnegative(f: HomPoly) -> None:
    negatives = f.negative_terms()
    if negatives:
        exp, coef = negatives[0]
        raise VerifierInputError(
            f"coefficient {coef} of exponent {list(exp)} is negative", "poly")


def quadratic_in_L2(q: HomPoly) -> Verdict:
    """A nonnegative quadratic form is in L2 iff its Hessian has exactly one positive eigenvalue."""
    if q.is_zero:
        return Verdict.passed(reason="zero polynomial")
    if q.degree != 2:
        raise VerifierInputError(f"expected a quadratic form, got degree {q.degree}", "poly")
    _require_nonnegative(q)
    signature = inertia(hessian_at(q, [Fraction(0)] * q.nvars))
    if signature.positive == 1:
        return Verdict.passed(inertia=signature)
    return Verdict.failed({"inertia": signature}, inertia=signature)


def is_lorentzian(f: HomPoly) -> Verdict:
    """Nonnegative coefficients, M-convex support and every (d-2)-th derivative in L2."""
    negatives = f.negative_terms()
    if negatives:
        exp, coef = negatives[0]
        return Verdict.failed({"reason": "negative coefficient", "exp": exp, "coef": coef})
    if f.degree <= 1 or f.is_zero:
        return Verdict.passed(reason="degree at most one")

    support_verdict = m_convex_support(f.support)
    if not support_verdict.holds:
        return Verdict.failed({"reason": "support not M-convex", **support_verdict.witness},
                              checked=support_verdict.checked)

    checked = support_verdict.checked
    for alpha in compositions(f.nvars, f.degree - 2):
        q = partial(f, alpha)
        checked += 1
        verdict = quadratic_in_L2(q)
        if not verdict.holds:
            logger.debug(f"derivative {alpha} of degree-{f.degree} form leaves L2")
            return Verdict.failed(
                {"reason": "derivative not in L2", "alpha": alpha,
                 "inertia": verdict.details["inertia"]},
                checked=checked)
    return Verdict.passed(checked=checked)


def quadratic_class_equiv(f: HomPoly, x: Sequence[Fraction]) -> Verdict:
    """Compare the two characterizations of the quadratic class at a point.

    Concavity of f^(1/d) at x holds iff f(x) H - (1 - 1/d) g g^T is negative
    semidefinite. The Hessian condition is "H has exactly one positive
    eigenvalue". ``holds`` means the two conditions agree at x.
    """
    if f.degree < 2:
        raise VerifierInputError(f"expected degree >= 2, got {f.degree}", "poly")
    if f.nvars < 2:
        raise VerifierInputError("expected at least two variables", "nvars")
    value = evaluate(f, x)
    if value <= 0:
        raise PreconditionError(f"f(x) = {value} is not positive", "point")

    hessian = hessian_at(f, x).entries
    gradient = gradient_at(f, x)
    shrink = 1 - Fraction(1, f.degree)
    concavity_matrix = [[value * hessian[i][j] - shrink * gradient[i] * gradient[j]
                         for j in range(f.nvars)] for i in range(f.nvars)]

    hessian_signature = inertia(hessian)
    concavity_signature = inertia(concavity_matrix)
    concave = concavity_signature.positive == 0
    one_positive = hessian_signature.positive == 1
    details = {
        "concave_root": concave,
        "hessian_one_positive": one_positive,
        "hessian_inertia": hessian_signature,
        "concavity_inertia": concavity_signature,
    }
    if concave == one_positive:
        return Verdict.passed(**details)
    return Verdict.failed({"x": tuple(x), **details}, **details)


def af_coefficient_check(f: HomPoly) -> Verdict:
    """Coefficient-level log-concavity: (d^a f)^2 >= d^(a+e_i-e_j) f * d^(a-e_i+e_j) f
    over all |a| = d and i != j."""
    n = f.nvars
    checked = 0
    worst = None
    for alpha in compositions(n, f.degree):
        centre = _derivative_constant(f, alpha)
        for i in range(n):
            for j in range(n):
                if i == j:
                    continue
                up = sub(add(alpha, unit(n, i)), unit(n, j))
                down = add(sub(alpha, unit(n, i)), unit(n, j))
                checked += 1
                margin = centre * centre - (_derivative_constant(f, up)
                                           * _derivative_constant(f, down))
                worst = margin if worst is None else min(worst, margin)
                if margin < 0:
                    return Verdict.failed({"alpha": alpha, "i": i + 1, "j": j + 1},
                                          margin=margin, checked=checked)
    return Verdict.passed(margin=worst, checked=checked)


def _derivative_constant(f: HomPoly, alpha: MultiIndex) -> Fraction:
    if any(a < 0 for a in alpha):
        return Fraction(0)
    return partial(f, alpha).coefficient((0,) * f.nvars)
