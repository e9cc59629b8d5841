"""Valuations of Schur type on polytopes.

A spec is a list of tuples (lambda, E) with E a list of bodies. The form
s_lam(E) is expanded into monomials, each monomial x^a standing for the
bodies of E repeated a_i times; Theta(M, N) is the resulting nonnegative
combination of mixed volumes V(..., M, N).
"""

from dataclasses import dataclass
from fractions import Fraction
from itertools import product
from typing import Any, Sequence

from ..convgeom.mixed import MinkowskiCombiner
from ..convgeom.polytope import Polytope
from ..errors import VerifierInputError
from ..lorentz.verdict import Verdict
from ..polycore.multiindex import compositions, multinomial
from ..polycore.polynomial import HomPoly
from ..verifier_logging import get_logger
from .partitions import Partition
from .schur import schur

logger = get_logger()

# coefficient, then (body, multiplicity) pairs
ExpandedTerm = tuple[Fraction, list[tuple[Polytope, int]]]


@dataclass(frozen=True)
class SchurValuationSpec:
    """Partitions paired with the body tuples their Schur polynomials are evaluated on."""

    tuples: tuple[tuple[Partition, tuple[Polytope, ...]], ...]

    def __post_init__(self):
        cleaned = []
        for lam, bodies in self.tuples:
            bodies = tuple(bodies)
            if len(bodies) != lam.e:
                raise VerifierInputError(
                    f"partition {lam} uses e = {lam.e} variables but {len(bodies)} bodies given",
                    "bodies")
            cleaned.append((lam, bodies))
        if not cleaned:
            raise VerifierInputError("need at least one (partition, bodies) tuple", "tuples")
        n = cleaned[0][1][0].ambient_dim
        if any(b.ambient_dim != n for _, bodies in cleaned for b in bodies):
            raise VerifierInputError("bodies live in different dimensions", "bodies")
        object.__setattr__(self, "tuples", tuple(cleaned))

    @classmethod
    def from_json(cls, data: Any) -> "SchurValuationSpec":
        """``{"tuples": [{"partition": [..], "bodies": [<polytope>, ...]}, ...]}``.

        ``e`` defaults to the number of bodies in the tuple.
        """
        if not isinstance(data, dict) or not isinstance(data.get("tuples"), list):
            raise VerifierInputError("expected an object with a 'tuples' list", "tuples")
        tuples = []
        for item in data["tuples"]:
            if not isinstance(item, dict) or "partition" not in item or "bodies" not in item:
                raise VerifierInputError("each tuple needs 'partition' and 'bodies'", "tuples")
            bodies = tuple(Polytope.from_json(b) for b in item["bodies"])
            raw = item["partition"]
            lam = (Partition.from_json(raw) if isinstance(raw, dict)
                   else Partition(tuple(raw), len(bodies)))
            tuples.append((lam, bodies))
        return cls(tuple(tuples))

    def to_json(self) -> dict[str, Any]:
        return {"tuples": [{"partition": lam.to_json(), "bodies": [b.to_json() for b in bodies]}
                           for lam, bodies in self.tuples]}

    @property
    def ambient_dim(self) -> int:
        return self.tuples[0][1][0].ambient_dim

    @property
    def degree(self) -> int:
        return sum(lam.size for lam, _ in self.tuples)

    def bodies(self) -> list[Polytope]:
        distinct: list[Polytope] = []
        for _, bodies in self.tuples:
            for b in bodies:
                if b not in distinct:
                    distinct.append(b)
        return distinct

    def expand(self) -> list[ExpandedTerm]:
        """Monomial expansion of the product of the Schur forms."""
        per_tuple = []
        for lam, bodies in self.tuples:
            terms = [(coef, [(bodies[i], a) for i, a in enumerate(exp) if a])
                     for exp, coef in schur(lam).sorted_terms()]
            per_tuple.append(terms)
        expanded = []
        for choice in product(*per_tuple):
            coef = Fraction(1)
            slots: list[tuple[Polytope, int]] = []
            for c, pairs in choice:
                coef *= c
                slots.extend(pairs)
            expanded.append((coef, slots))
        return expanded


class _SlotVolumes:
    """Mixed volumes over a fixed list of distinct bodies, sharing one combiner."""

    def __init__(self, bodies: Sequence[Polytope]):
        distinct: list[Polytope] = []
        for b in bodies:
            if b not in distinct:
                distinct.append(b)
        self.bodies = distinct
        self.combiner = MinkowskiCombiner(distinct)

    def mixed_volume(self, slots: Sequence[tuple[Polytope, int]]) -> Fraction:
        multiplicities = [0] * len(self.bodies)
        for body, count in slots:
            multiplicities[self.bodies.index(body)] += count
        return self.combiner.mixed_volume(multiplicities)


def _check_pair(spec: SchurValuationSpec, m: Polytope, n_body: Polytope) -> None:
    n = spec.ambient_dim
    if m.ambient_dim != n or n_body.ambient_dim != n:
        raise VerifierInputError("M and N must share the ambient dimension of the valuation", "M")
    if spec.degree != n - 2:
        raise VerifierInputError(
            f"partition sizes sum to {spec.degree}, expected n - 2 = {n - 2}", "tuples")


def _theta(terms: list[ExpandedTerm], volumes: _SlotVolumes,
           m: Polytope, n_body: Polytope) -> Fraction:
    return sum((coef * volumes.mixed_volume([*slots, (m, 1), (n_body, 1)])
                for coef, slots in terms), Fraction(0))


def schur_valuation(spec: SchurValuationSpec, m: Polytope, n_body: Polytope) -> Fraction:
    """Theta(M, N) = V(s_lam1(E_1), ..., s_lamp(E_p), M, N)."""
    _check_pair(spec, m, n_body)
    volumes = _SlotVolumes([*spec.bodies(), m, n_body])
    return _theta(spec.expand(), volumes, m, n_body)


def schur_af_check(spec: SchurValuationSpec, m: Polytope, n_body: Polytope) -> Verdict:
    """Theta(M, M) Theta(N, N) <= Theta(M, N)^2."""
    _check_pair(spec, m, n_body)
    volumes = _SlotVolumes([*spec.bodies(), m, n_body])
    terms = spec.expand()
    mixed = _theta(terms, volumes, m, n_body)
    first = _theta(terms, volumes, m, m)
    second = _theta(terms, volumes, n_body, n_body)
    margin = mixed ** 2 - first * second
    details = {"theta_MN": mixed, "theta_MM": first, "theta_NN": second}
    if margin < 0:
        logger.warning(f"Schur-type AF violation: {details}")
        return Verdict.failed(details, margin=margin)
    return Verdict.passed(margin=margin, **details)


def schur_volume_polynomial(spec: SchurValuationSpec, bodies: Sequence[Polytope],
                            m: int) -> HomPoly:
    """f(x) = V((x_1 L_1 + ... + x_k L_k)[m], s_lam1(E_1), ..., s_lamp(E_p))."""
    if not bodies:
        raise VerifierInputError("need at least one body L_i", "bodies")
    n = spec.ambient_dim
    if any(b.ambient_dim != n for b in bodies):
        raise VerifierInputError("bodies L_i must share the ambient dimension of the valuation",
                                 "bodies")
    if not 1 <= m <= n or spec.degree != n - m:
        raise VerifierInputError(
            f"partition sizes sum to {spec.degree}, expected n - m = {n - m}", "m")
    volumes = _SlotVolumes([*bodies, *spec.bodies()])
    terms = spec.expand()
    k = len(bodies)
    coefficients = {}
    for a in compositions(k, m):
        chosen = [(bodies[i], count) for i, count in enumerate(a) if count]
        value = sum((coef * volumes.mixed_volume([*chosen, *slots]) for coef, slots in terms),
                    Fraction(0))
        coefficients[a] = multinomial(a) * value
    return HomPoly(k, m, coefficients)
