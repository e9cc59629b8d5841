"""Mixed volumes by polarization and volume polynomials by interpolation."""

from dataclasses import dataclass
from fractions import Fraction
from itertools import product
from math import comb, factorial, prod
from typing import Any, Optional, Sequence

from ..errors import VerifierInputError
from ..polycore.multiindex import compositions, multinomial
from ..polycore.polynomial import HomPoly
from ..polycore.rational import solve_exact
from ..verifier_logging import get_logger
from .polytope import Polytope, minkowski_sum, point

logger = get_logger()

Coefficients = tuple[int, ...]


@dataclass(frozen=True)
class MixedVolumeSpec:
    """V(K_1[i_1], ..., K_r[i_r]) with the multiplicities summing to the ambient dimension."""

    bodies: tuple[Polytope, ...]
    multiplicities: tuple[int, ...]

    def __post_init__(self):
        bodies = tuple(self.bodies)
        multiplicities = tuple(int(m) for m in self.multiplicities)
        if not bodies or len(bodies) != len(multiplicities):
            raise VerifierInputError("bodies and multiplicities must match", "multiplicities")
        n = bodies[0].ambient_dim
        if any(b.ambient_dim != n for b in bodies):
            raise VerifierInputError("bodies live in different dimensions", "bodies")
        if any(m < 0 for m in multiplicities):
            raise VerifierInputError("multiplicities must be nonnegative", "multiplicities")
        if sum(multiplicities) != n:
            raise VerifierInputError(
                f"multiplicities sum to {sum(multiplicities)}, expected {n}", "multiplicities")
        object.__setattr__(self, "bodies", bodies)
        object.__setattr__(self, "multiplicities", multiplicities)

    @classmethod
    def from_json(cls, data: Any) -> "MixedVolumeSpec":
        if not isinstance(data, dict) or "bodies" not in data:
            raise VerifierInputError("expected an object with 'bodies'", "input")
        bodies = tuple(Polytope.from_json(b) for b in data["bodies"])
        n = bodies[0].ambient_dim if bodies else 0
        multiplicities = data.get("multiplicities")
        if multiplicities is None:
            if len(bodies) != n:
                raise VerifierInputError(
                    "give multiplicities or exactly n bodies", "multiplicities")
            multiplicities = [1] * n
        return cls(bodies, tuple(multiplicities))


class MinkowskiCombiner:
    """Volumes of nonnegative integer Minkowski combinations of a fixed body list.

    Combinations are built incrementally from smaller cached ones, so every
    polarization and interpolation over the same bodies shares hull work.
    """

    def __init__(self, bodies: Sequence[Polytope]):
        if not bodies:
            raise VerifierInputError("need at least one body", "bodies")
        self.n = bodies[0].ambient_dim
        if any(b.ambient_dim != self.n for b in bodies):
            raise VerifierInputError("bodies live in different dimensions", "bodies")
        self.bodies = tuple(bodies)
        self._polytopes: dict[Coefficients, Polytope] = {}

    def _check(self, coeffs: Sequence[int]) -> Coefficients:
        coeffs = tuple(int(c) for c in coeffs)
        if len(coeffs) != len(self.bodies) or any(c < 0 for c in coeffs):
            raise VerifierInputError(f"invalid combination coefficients {coeffs}", "coefficients")
        return coeffs

    def polytope(self, coeffs: Sequence[int]) -> Polytope:
        coeffs = self._check(coeffs)
        cached = self._polytopes.get(coeffs)
        if cached is not None:
            return cached
        if not any(coeffs):
            result = point(self.n)
        else:
            last = max(i for i, c in enumerate(coeffs) if c)
            previous = list(coeffs)
            previous[last] -= 1
            if any(previous):
                result = minkowski_sum(self.polytope(previous), self.bodies[last])
            else:
                result = self.bodies[last]
        self._polytopes[coeffs] = result
        return result

    def volume(self, coeffs: Sequence[int]) -> Fraction:
        return self.polytope(coeffs).volume

    def mixed_volume(self, multiplicities: Sequence[int]) -> Fraction:
        """(1/n!) sum over 0 != c <= a of (-1)^(n-|c|) prod binom(a_i, c_i) vol(sum c_i K_i)."""
        a = self._check(multiplicities)
        if sum(a) != self.n:
            raise VerifierInputError(
                f"multiplicities sum to {sum(a)}, expected {self.n}", "multiplicities")
        total = Fraction(0)
        for c in product(*(range(m + 1) for m in a)):
            size = sum(c)
            if size == 0:
                continue
            weight = prod(comb(m, k) for m, k in zip(a, c))
            sign = -1 if (self.n - size) % 2 else 1
            total += sign * weight * self.volume(c)
        return total / factorial(self.n)

    @property
    def cached_combinations(self) -> int:
        return len(self._polytopes)


def mixed_volume(spec: MixedVolumeSpec, combiner: Optional[MinkowskiCombiner] = None) -> Fraction:
    combiner = combiner or MinkowskiCombiner(spec.bodies)
    return combiner.mixed_volume(spec.multiplicities)


def mixed_volume_of(bodies: Sequence[Polytope]) -> Fraction:
    """V(K_1, ..., K_n) for a list of n bodies, repeated bodies merged into multiplicities."""
    distinct: list[Polytope] = []
    counts: list[int] = []
    for body in bodies:
        if body in distinct:
            counts[distinct.index(body)] += 1
        else:
            distinct.append(body)
            counts.append(1)
    return mixed_volume(MixedVolumeSpec(tuple(distinct), tuple(counts)))


def volume_polynomial(bodies: Sequence[Polytope],
                      combiner: Optional[MinkowskiCombiner] = None) -> HomPoly:
    """vol(x_1 P_1 + ... + x_k P_k) as a degree-n form in k variables.

    Coefficients come from exact interpolation at the lattice points of the
    dilated simplex {g in N^k : |g| = n}, which are unisolvent for degree-n forms.
    """
    combiner = combiner or MinkowskiCombiner(bodies)
    n, k = combiner.n, len(combiner.bodies)
    monomials = list(compositions(k, n))
    rows = [[Fraction(prod(g ** e for g, e in zip(node, exp))) for exp in monomials]
            for node in monomials]
    values = [combiner.volume(node) for node in monomials]
    coefficients = solve_exact(rows, values)
    logger.debug(f"volume polynomial of {k} bodies in R^{n}: {len(monomials)} nodes")
    return HomPoly(k, n, dict(zip(monomials, coefficients)))


def volume_polynomial_by_polarization(bodies: Sequence[Polytope],
                                      combiner: Optional[MinkowskiCombiner] = None) -> HomPoly:
    """Same polynomial, each coefficient (n!/a!) V(P[a]) computed by polarization."""
    combiner = combiner or MinkowskiCombiner(bodies)
    n, k = combiner.n, len(combiner.bodies)
    terms = {a: multinomial(a) * combiner.mixed_volume(a) for a in compositions(k, n)}
    return HomPoly(k, n, terms)
