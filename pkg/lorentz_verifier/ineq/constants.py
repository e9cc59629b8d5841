"""Exact constants of the rKT and Pluennecke-Ruzsa inequalities."""

from fractions import Fraction
from functools import lru_cache
from math import comb, factorial

from ..errors import VerifierInputError


def _check_lengths(d: int, k: int, l: int) -> None:
    if d < 0 or k < 0 or l < 0:
        raise VerifierInputError(f"negative argument in ({d}, {k}, {l})", "degree")
    if k + l > d:
        raise VerifierInputError(f"|beta| + |gamma| = {k + l} exceeds degree {d}", "splitting")


def _base(d: int, k: int, l: int) -> Fraction:
    return Fraction(factorial(d - k) * factorial(d - l), factorial(d) * factorial(d - k - l))


def rkt_constant(d: int, k: int, l: int) -> Fraction:
    """2^(kl) (d-k)! (d-l)! / (d! (d-k-l)!), valid for every Lorentzian polynomial."""
    _check_lengths(d, k, l)
    return 2 ** (k * l) * _base(d, k, l)


def rkt_optimal_constant(d: int, k: int, l: int) -> Fraction:
    """binom(k+l, k) (d-k)! (d-l)! / (d! (d-k-l)!), the volume-polynomial constant.

    Equals 1 when k + l = d and 2(1 - 1/d) when k = l = 1.
    """
    _check_lengths(d, k, l)
    return comb(k + l, k) * _base(d, k, l)


@lru_cache(maxsize=None)
def pr_constant(d: int) -> Fraction:
    """c_d: the largest rkt_constant over every admissible (k, l)."""
    if d < 0:
        raise VerifierInputError("degree must be nonnegative", "degree")
    return max(rkt_constant(d, k, l) for k in range(d + 1) for l in range(d + 1 - k))


def intersection_form_constant(d: int, k: int, optimal: bool = True) -> Fraction:
    """Rewrite the |alpha| = d derivative-form constant in intersection-number form.

    binom(d, k) for the optimal constant, 2^(k(d-k)) for the general one.
    """
    constant = rkt_optimal_constant(d, k, d - k) if optimal else rkt_constant(d, k, d - k)
    return constant * Fraction(factorial(d), factorial(d - k) * factorial(k))
