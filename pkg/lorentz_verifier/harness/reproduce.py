"""Named reproductions of known examples and counterexamples.

Each reproduction runs a fixed list of checks, every one paired with the
outcome it is expected to have. A reproduction succeeds when all outcomes
match, including the violations it exists to exhibit.
"""

from dataclasses import dataclass, field
from fractions import Fraction
from math import comb
from typing import Any

from ..convgeom.inequalities import (
    one_rayleigh_counterexample_report,
    quermass_polytopal_check,
    rkt_convex_check,
)
from ..convgeom.mixed import volume_polynomial, volume_polynomial_by_polarization
from ..convgeom.polytope import bipyramid, cube, point, segment, simplex, unit_segment
from ..ineq.checkers import RktInstance, rkt_optimal_check
from ..ineq.constants import intersection_form_constant, pr_constant, rkt_optimal_constant
from ..ineq.sweep import SweepPlan, rkt_sweep
from ..lorentz.inertia import inertia
from ..lorentz.membership import is_lorentzian
from ..lorentz.verdict import Verdict
from ..matroid.ground import GroundSet
from ..matroid.polymatroid import RankOracle, check_polymatroid, is_matroid
from ..polycore.multiindex import compositions
from ..polycore.polynomial import HomPoly
from ..polycore.symmatrix import SymMatrix
from ..schurmix.discriminant import md_af_check, md_hodge_form, mixed_discriminant, schur_md_form
from ..schurmix.partitions import Partition, bounded_partitions
from ..schurmix.schur import (
    derived_schur,
    determinant_matches_bialternant,
    elementary_symmetric,
    schur,
    segre,
)
from ..verifier_logging import get_logger

logger = get_logger()


@dataclass
class ReproductionResult:
    name: str
    expected_violation: bool
    checks: dict[str, Verdict] = field(default_factory=dict)
    expected: dict[str, bool] = field(default_factory=dict)
    values: dict[str, Any] = field(default_factory=dict)

    def expect(self, label: str, verdict: Verdict, holds: bool = True) -> None:
        self.checks[label] = verdict
        self.expected[label] = holds
        if verdict.holds != holds:
            logger.warning(f"{self.name}: {label} gave holds={verdict.holds}, expected {holds}")

    def equality(self, label: str, actual: Any, wanted: Any) -> None:
        if actual == wanted:
            self.expect(label, Verdict.passed(value=actual))
        else:
            self.expect(label, Verdict.failed({"actual": actual, "expected": wanted}))

    @property
    def violation_found(self) -> bool:
        return any(not v.holds for v in self.checks.values())

    @property
    def matches_expectation(self) -> bool:
        return all(self.checks[k].holds == self.expected[k] for k in self.checks)

    def to_json(self) -> dict[str, Any]:
        return {
            "name": self.name,
            "expected_violation": self.expected_violation,
            "violation_found": self.violation_found,
            "matches_expectation": self.matches_expectation,
            "checks": {k: {"expected_holds": self.expected[k], **v.to_json()}
                       for k, v in self.checks.items()},
            "values": self.values,
        }


def huh_polynomial() -> HomPoly:
    """A Lorentzian cubic that is not a volume polynomial."""
    return HomPoly(3, 3, {
        (3, 0, 0): 14, (2, 1, 0): 6, (2, 0, 1): 24,
        (1, 1, 1): 12, (1, 0, 2): 6, (0, 1, 2): 3,
    })


def _unit(n: int, i: int, scale: int = 1) -> tuple[int, ...]:
    return tuple(scale * int(j == i) for j in range(n))


def reproduce_huh_example() -> ReproductionResult:
    result = ReproductionResult("huh-example", expected_violation=True)
    f = huh_polynomial()
    result.expect("lorentzian", is_lorentzian(f))
    points = [_unit(3, 0), _unit(3, 1), _unit(3, 2), (1, 1, 1)]
    full = SweepPlan(mode="full")
    result.expect("rkt_general", rkt_sweep(f, points, optimal=False, plan=full))
    result.expect("rkt_optimal", rkt_sweep(f, points, optimal=True, plan=full), holds=False)
    planted = RktInstance(f, _unit(3, 0), _unit(3, 1), _unit(3, 2, 2))
    result.expect("rkt_optimal_e1_e2_2e3", rkt_optimal_check(planted), holds=False)
    return result


def reproduce_bipyramid() -> ReproductionResult:
    result = ReproductionResult("bipyramid", expected_violation=True)
    report = one_rayleigh_counterexample_report()
    result.expect("one_rayleigh", report["one_rayleigh"], holds=False)
    result.expect("sharp_bound", report["sharp_bound"])
    result.equality("sharp_equality", report["sharp_equality"], True)
    result.values = {k: v for k, v in report.items()
                     if k not in ("one_rayleigh", "sharp_bound", "body")}
    return result


def reproduce_schur_examples(max_size: int = 6, max_e: int = 4) -> ReproductionResult:
    result = ReproductionResult("schur-examples", expected_violation=False)
    s1, s2, s3 = (elementary_symmetric(k, 3) for k in (1, 2, 3))
    result.equality("s(2)", schur(Partition((2,), 3)), s2)
    result.equality("s(1,1)", schur(Partition((1, 1), 3)), s1 * s1 - s2)
    result.equality("s(2,1)", schur(Partition((2, 1), 3)), s1 * s2 - s3)
    result.equality("s(1,1,1)", schur(Partition((1, 1, 1), 3)), s1 * s1 * s1 - 2 * (s1 * s2) + s3)
    result.equality("derived s(1,1) i=1", derived_schur(Partition((1, 1), 2), 2, 1),
                    3 * elementary_symmetric(1, 2))
    result.equality("derived s(1,1) i=2", derived_schur(Partition((1, 1), 2), 2, 2),
                    HomPoly.constant(2, 3))
    for e in range(1, max_e + 1):
        for k in range(1, e + 1):
            complete = HomPoly(e, k, {exp: 1 for exp in compositions(e, k)})
            result.equality(f"segre k={k} e={e}", segre(k, e), complete)
    compared = 0
    for e in range(1, max_e + 1):
        for lam in bounded_partitions(max_size, e):
            label = f"e={e} {lam}"
            result.expect(f"bialternant {label}", determinant_matches_bialternant(lam))
            negative = schur(lam).negative_terms()
            result.expect(f"nonnegative {label}",
                          Verdict.failed({"negative": negative}) if negative else Verdict.passed())
            compared += 1
    result.values = {"partitions_compared": compared}
    return result


def reproduce_md_signature(max_n: int = 4) -> ReproductionResult:
    result = ReproductionResult("md-signature", expected_violation=False)
    result.equality("D(diag(1,0), diag(0,1))",
                    mixed_discriminant([SymMatrix.diagonal([1, 0]), SymMatrix.diagonal([0, 1])]),
                    Fraction(1, 2))
    for n in range(2, max_n + 1):
        identity = SymMatrix.identity(n)
        for m in range(2, n + 1):
            gram = md_hodge_form([identity] * (m - 2), identity, m)
            result.equality(f"inertia n={n} m={m}", inertia(gram).as_tuple(),
                            (1, 0, n * (n + 1) // 2 - 1))
        a = SymMatrix.diagonal(range(1, n + 1))
        b = SymMatrix.from_rows([[int(i + j == n - 1) - int(i == j) for j in range(n)]
                                 for i in range(n)])
        result.expect(f"af n={n}", md_af_check(a, b, [identity] * (n - 2)))
        if n >= 3:
            lam = Partition((n - 2,), n - 2)
            gram = schur_md_form(lam, [identity] * lam.e, [], n)
            result.equality(f"schur form n={n} lambda={lam.parts}", inertia(gram).as_tuple(),
                            (1, 0, n * (n + 1) // 2 - 1))
        if n >= 4:
            lam = Partition((1,), 1)
            gram = schur_md_form(lam, [identity], [a] * (n - 3), n)
            result.equality(f"schur form n={n} lambda=(1,) with A", inertia(gram).as_tuple(),
                            (1, 0, n * (n + 1) // 2 - 1))
    return result


def reproduce_polymatroid_demo() -> ReproductionResult:
    """U_{2,3} from three coplanar segments; a planted point is a loop."""
    result = ReproductionResult("polymatroid-demo", expected_violation=True)
    segments = (unit_segment(3, 0), unit_segment(3, 1), segment((0, 0, 0), (1, 1, 0)))
    oracle = RankOracle(GroundSet(segments, 2))
    result.expect("polymatroid", check_polymatroid(oracle))
    result.equality("matroid", is_matroid(oracle), True)
    result.equality("ranks", [oracle.rank_of_mask(mask) for mask in range(8)],
                    [0, 1, 1, 2, 1, 2, 2, 2])
    planted = RankOracle(GroundSet((*segments, point(3)), 2))
    result.expect("planted_loop", check_polymatroid(planted), holds=False)
    return result


def reproduce_volume_lorentzian() -> ReproductionResult:
    result = ReproductionResult("volume-lorentzian", expected_violation=False)
    bodies = [cube(3), simplex(3), unit_segment(3, 0)]
    f = volume_polynomial(bodies)
    result.expect("lorentzian", is_lorentzian(f))
    result.equality("polarization", volume_polynomial_by_polarization(bodies), f)
    result.values = {"volume_polynomial": f}
    return result


def reproduce_convex_rkt() -> ReproductionResult:
    result = ReproductionResult("convex-rkt", expected_violation=False)
    verdict = rkt_convex_check(bipyramid(), [unit_segment(3, 0), unit_segment(3, 1)], 1)
    result.expect("bipyramid k=1", verdict)
    result.equality("equality", verdict.margin, Fraction(0))
    quermass = quermass_polytopal_check(cube(3), cube(3), [0], 0, 2)
    result.expect("quermass cube k=0", quermass)
    result.equality("quermass equality", quermass.margin, Fraction(0))
    return result


def reproduce_constants() -> ReproductionResult:
    result = ReproductionResult("constants", expected_violation=False)
    wanted = {2: Fraction(1), 3: Fraction(4, 3), 4: Fraction(8, 3), 5: Fraction(32, 5)}
    for d, value in wanted.items():
        result.equality(f"c_{d}", pr_constant(d), value)
        result.equality(f"optimal d={d} k=l=1", rkt_optimal_constant(d, 1, 1),
                        2 * (1 - Fraction(1, d)))
        for k in range(d + 1):
            result.equality(f"intersection d={d} k={k}", intersection_form_constant(d, k),
                            comb(d, k))
            result.equality(f"intersection general d={d} k={k}",
                            intersection_form_constant(d, k, optimal=False), 2 ** (k * (d - k)))
    return result
