"""Deterministic fuzz corpus and the per-mode trials run over it.

Trial ``t`` of a run with seed ``s`` draws everything from
``random.Random(s * 1_000_003 + t)``, so a trial can be regenerated on its
own, in any process, without replaying the trials before it.
"""

import hashlib
import random
import time
from collections import Counter
from dataclasses import dataclass, field
from fractions import Fraction
from typing import Any, Callable, Iterator, Optional

from ..convgeom.hull import affine_dimension
from ..convgeom.inequalities import pr_convex_ratio, rkt_convex_check
from ..convgeom.mixed import MinkowskiCombiner, mixed_volume_of, volume_polynomial
from ..convgeom.polytope import Polytope, segment
from ..errors import VerifierInputError
from ..ineq.constants import pr_constant
from ..ineq.sweep import (
    SweepPlan,
    af_form_sweep,
    pr_ratio_sweep,
    rkt_sweep,
    supermodularity_sweep,
)
from ..lorentz.inertia import inertia
from ..lorentz.membership import is_lorentzian
from ..lorentz.rayleigh import (
    c_rayleigh_check,
    default_rayleigh_constant,
    two_variable_one_rayleigh,
)
from ..lorentz.verdict import Verdict
from ..matroid.ground import GroundSet, minkowski_total, nd_by_dimension
from ..matroid.polymatroid import RankOracle, check_polymatroid
from ..polycore.codec import dumps
from ..polycore.polynomial import HomPoly, hessian_at
from ..polycore.symmatrix import SymMatrix
from ..schurmix.discriminant import discriminant_polynomial, md_af_check, md_hodge_form
from ..schurmix.partitions import Partition, partitions_of
from ..schurmix.valuation import SchurValuationSpec, schur_af_check, schur_volume_polynomial
from ..verifier_logging import get_logger
from .pool import ordered_map

logger = get_logger()

TRIAL_STRIDE = 1_000_003


@dataclass(frozen=True)
class FuzzSettings:
    """Sizes of generated instances."""

    points_per_instance: int = 10
    max_vars: int = 5
    max_degree: int = 5
    max_dim: int = 4
    max_vertices: int = 12
    coordinate_bound: int = 4
    max_denominator: int = 4
    sample_splittings: int = 1000
    max_splittings: int = 10_000


@dataclass(frozen=True)
class TrialOutcome:
    trial: int
    digest: str
    verdict: Verdict
    family: Optional[str] = None

    def to_json(self) -> dict[str, Any]:
        data = {"trial": self.trial, "digest": self.digest, **self.verdict.to_json()}
        if self.family is not None:
            data["family"] = self.family
        return data


# (rng, settings, trial seed) -> (instance payload, verdict)
TrialFunction = Callable[[random.Random, FuzzSettings, int], tuple[dict[str, Any], Verdict]]


def trial_seed(seed: int, trial: int) -> int:
    return seed * TRIAL_STRIDE + trial


def trial_rng(seed: int, trial: int) -> random.Random:
    return random.Random(trial_seed(seed, trial))


def instance_digest(payload: Any) -> str:
    return hashlib.sha256(dumps(payload).encode("utf-8")).hexdigest()


# random primitives

def random_rational(rng: random.Random, low: int, high: int, max_den: int) -> Fraction:
    den = rng.randint(1, max_den)
    return Fraction(rng.randint(low * den, high * den), den)


def random_point(rng: random.Random, n: int, settings: FuzzSettings,
                 positive: bool = False) -> tuple[Fraction, ...]:
    """A point of the nonnegative orthant (strictly positive on request)."""
    while True:
        point = tuple(random_rational(rng, 0, settings.coordinate_bound, settings.max_denominator)
                      for _ in range(n))
        if not positive or all(c > 0 for c in point):
            return point


def random_linear_form_product(rng: random.Random, n: int, d: int,
                               settings: FuzzSettings) -> HomPoly:
    """A product of d linear forms with nonnegative coefficients, none identically zero."""
    product = HomPoly.constant(n, 1)
    for _ in range(d):
        coefficients = [Fraction(0)] * n
        while not any(coefficients):
            coefficients = [
                random_rational(rng, 0, settings.coordinate_bound, settings.max_denominator)
                if rng.random() < 0.75 else Fraction(0) for _ in range(n)]
        product = product * HomPoly.linear_form(coefficients)
    return product


def random_vertices(rng: random.Random, n: int, count: int,
                    settings: FuzzSettings) -> list[tuple[Fraction, ...]]:
    bound = settings.coordinate_bound
    return [tuple(random_rational(rng, -bound, bound, settings.max_denominator) for _ in range(n))
            for _ in range(count)]


def random_polytope(rng: random.Random, n: int, settings: FuzzSettings,
                    max_vertices: Optional[int] = None) -> Polytope:
    """A full-dimensional polytope with at most ``max_vertices`` generating points."""
    cap = max(n + 1, max_vertices or settings.max_vertices)
    while True:
        points = random_vertices(rng, n, rng.randint(n + 1, cap), settings)
        if affine_dimension(points) == n:
            return Polytope(n, tuple(points))


def random_body(rng: random.Random, n: int, settings: FuzzSettings,
                max_vertices: int = 4) -> Polytope:
    """A polytope of any positive dimension: a segment or a few random points."""
    while True:
        if rng.random() < 0.5:
            points = random_vertices(rng, n, 2, settings)
        else:
            points = random_vertices(rng, n, rng.randint(2, max_vertices), settings)
        if affine_dimension(points) >= 1:
            return Polytope(n, tuple(points))


def random_pd_matrix(rng: random.Random, n: int) -> SymMatrix:
    """B B^T + I for a small integer matrix B."""
    b = [[rng.randint(-2, 2) for _ in range(n)] for _ in range(n)]
    rows = [[sum(b[i][k] * b[j][k] for k in range(n)) + int(i == j) for j in range(n)]
            for i in range(n)]
    return SymMatrix.from_rows(rows)


def random_symmetric_matrix(rng: random.Random, n: int) -> SymMatrix:
    rows = [[0] * n for _ in range(n)]
    for i in range(n):
        for j in range(i, n):
            rows[i][j] = rows[j][i] = rng.randint(-3, 3)
    return SymMatrix.from_rows(rows)


LORENTZIAN_FAMILIES = ("linear-product", "volume", "convex-combination")

MAX_BODIES = 4


def _linear_product_instance(rng: random.Random, settings: FuzzSettings,
                             min_degree: int = 1) -> HomPoly:
    n = rng.randint(1, settings.max_vars)
    d = rng.randint(min_degree, max(min_degree, settings.max_degree))
    return random_linear_form_product(rng, n, d, settings)


def lorentzian_instance(rng: random.Random, settings: FuzzSettings,
                        min_degree: int = 1) -> tuple[str, HomPoly]:
    """Draw a Lorentzian polynomial and name the family it came from.

    Families are products of linear forms, volume polynomials of random
    polytopes, and convex combinations t f + (1 - t) g of one of those with a
    product of the same shape. A combination is kept only when is_lorentzian
    accepts it; otherwise its first summand is returned under its own family.
    ``min_degree`` may be 1 or 2; volume polynomials always have degree >= 2.
    """
    family = rng.choice(LORENTZIAN_FAMILIES)
    if family == "volume":
        return family, _volume_instance(rng, settings)[1]
    if family == "linear-product":
        return family, _linear_product_instance(rng, settings, min_degree)

    if rng.random() < 0.5:
        base_family, f = "volume", _volume_instance(rng, settings)[1]
    else:
        base_family, f = "linear-product", _linear_product_instance(rng, settings, min_degree)
    g = random_linear_form_product(rng, f.nvars, f.degree, settings)
    t = Fraction(rng.randint(1, 9), 10)
    combined = f.scale(t) + g.scale(1 - t)
    if is_lorentzian(combined).holds:
        return family, combined
    logger.debug(f"convex combination with t={t} is not Lorentzian; keeping the {base_family}")
    return base_family, f


def corpus_instance(rng: random.Random, settings: FuzzSettings) -> dict[str, Any]:
    """One Lorentzian polynomial with sample points and (x, y, z) triples for it."""
    family, f = lorentzian_instance(rng, settings)
    return {
        "family": family,
        "poly": f,
        "points": [random_point(rng, f.nvars, settings)
                   for _ in range(settings.points_per_instance)],
        "triples": _triples(rng, f.nvars, settings),
    }


def fuzz_corpus(seed: int, trials: int,
                settings: Optional[FuzzSettings] = None) -> Iterator[dict[str, Any]]:
    """Yield the instances the rkt, pr, supermod and rayleigh modes check.

    Instance ``t`` depends only on ``(seed, t)`` and equals what trial ``t``
    of those modes draws.
    """
    if trials < 1:
        raise VerifierInputError("trials must be at least 1", "trials")
    settings = settings or FuzzSettings()
    for t in range(trials):
        yield {"trial": t, **corpus_instance(trial_rng(seed, t), settings)}


# trials, one per fuzz mode

def rkt_trial(rng: random.Random, settings: FuzzSettings, seed: int):
    instance = corpus_instance(rng, settings)
    plan = SweepPlan(mode="auto", samples=settings.sample_splittings, seed=seed)
    verdict = rkt_sweep(instance["poly"], instance["points"], plan=plan,
                        max_splittings=settings.max_splittings)
    return instance, verdict


def _triples(rng: random.Random, n: int, settings: FuzzSettings):
    return [tuple(random_point(rng, n, settings) for _ in range(3))
            for _ in range(settings.points_per_instance)]


def pr_trial(rng: random.Random, settings: FuzzSettings, seed: int):
    """The multiplicative triple inequality; the verdict carries the largest observed ratio."""
    instance = corpus_instance(rng, settings)
    f = instance["poly"]
    verdict = pr_ratio_sweep(f, instance["triples"])
    return {**instance, "constant": pr_constant(f.degree)}, verdict


def supermodularity_trial(rng: random.Random, settings: FuzzSettings, seed: int):
    instance = corpus_instance(rng, settings)
    return instance, supermodularity_sweep(instance["poly"], instance["triples"])


def rayleigh_trial(rng: random.Random, settings: FuzzSettings, seed: int):
    """2(1 - 1/d)-Rayleigh, and 1-Rayleigh when there are at most two variables."""
    instance = corpus_instance(rng, settings)
    f, points = instance["poly"], instance["points"]
    c = default_rayleigh_constant(f.degree)
    verdict = c_rayleigh_check(f, c, points)
    if f.nvars <= 2:
        verdict = verdict.combine_with(two_variable_one_rayleigh(f, points))
    return {**instance, "c": c}, verdict


def af_form_trial(rng: random.Random, settings: FuzzSettings, seed: int):
    family, f = lorentzian_instance(rng, settings, min_degree=2)
    n = f.nvars
    bound = settings.coordinate_bound
    groups = []
    for _ in range(settings.points_per_instance):
        first = tuple(random_rational(rng, -bound, bound, settings.max_denominator)
                      for _ in range(n))
        rest = [random_point(rng, n, settings, positive=True) for _ in range(f.degree - 1)]
        groups.append((first, *rest))
    return {"family": family, "poly": f, "vectors": groups}, af_form_sweep(f, groups)


def _volume_instance(rng: random.Random, settings: FuzzSettings) -> tuple[list[Polytope], HomPoly]:
    n = rng.randint(2, max(2, settings.max_dim))
    k = rng.randint(1, MAX_BODIES)
    bodies = [random_polytope(rng, n, settings) for _ in range(k)]
    return bodies, volume_polynomial(bodies)


def convex_pr_trial(rng: random.Random, settings: FuzzSettings, seed: int):
    """vol(A) vol(A+B+C) / (vol(A+B) vol(A+C)), recorded without asserting a bound."""
    n = rng.randint(2, max(2, settings.max_dim))
    a = random_polytope(rng, n, settings, max_vertices=n + 2)
    b = random_body(rng, n, settings, max_vertices=3)
    c = random_body(rng, n, settings, max_vertices=3)
    ratio = pr_convex_ratio(a, b, c)
    return {"A": a, "B": b, "C": c}, Verdict.passed(max_ratio=ratio)


def rkt_volume_trial(rng: random.Random, settings: FuzzSettings, seed: int):
    """rKT with the binomial constant, which volume polynomials satisfy."""
    bodies, f = _volume_instance(rng, settings)
    points = [random_point(rng, f.nvars, settings) for _ in range(settings.points_per_instance)]
    plan = SweepPlan(mode="auto", samples=settings.sample_splittings, seed=seed)
    verdict = rkt_sweep(f, points, optimal=True, plan=plan,
                        max_splittings=settings.max_splittings)
    return {"bodies": bodies, "poly": f, "points": points}, verdict


def volume_lorentzian_trial(rng: random.Random, settings: FuzzSettings, seed: int):
    """Volume polynomials are Lorentzian, with Lorentzian-signature Hessians inside the orthant."""
    bodies, f = _volume_instance(rng, settings)
    verdict = is_lorentzian(f)
    if verdict.holds:
        for _ in range(5):
            x = random_point(rng, f.nvars, settings, positive=True)
            signature = inertia(hessian_at(f, x))
            if signature.positive != 1:
                verdict = Verdict.failed({"reason": "Hessian signature", "x": x,
                                          "inertia": signature})
                break
            verdict = verdict.combine_with(Verdict.passed())
    return {"bodies": bodies, "poly": f}, verdict


def mixed_volume_trial(rng: random.Random, settings: FuzzSettings, seed: int):
    """Symmetry and Minkowski additivity of V in its first slot."""
    n = rng.randint(2, 3)
    bodies = [random_polytope(rng, n, settings, max_vertices=5) for _ in range(n)]
    extra = random_polytope(rng, n, settings, max_vertices=5)
    value = mixed_volume_of(bodies)
    shuffled = bodies[:]
    rng.shuffle(shuffled)
    permuted = mixed_volume_of(shuffled)
    additive = mixed_volume_of([bodies[0] + extra, *bodies[1:]])
    split = value + mixed_volume_of([extra, *bodies[1:]])
    details = {"value": value, "permuted": permuted, "additive": additive, "split": split}
    if value != permuted or additive != split or value < 0:
        return {"bodies": bodies, "extra": extra}, Verdict.failed(details)
    return {"bodies": bodies, "extra": extra}, Verdict.passed(margin=value, **details)


def convex_rkt_trial(rng: random.Random, settings: FuzzSettings, seed: int):
    n = rng.randint(3, min(4, max(3, settings.max_dim)))
    m = rng.randint(0, n)
    k = rng.randint(0, m)
    b = random_polytope(rng, n, settings, max_vertices=n + 2)
    bodies = [random_body(rng, n, settings, max_vertices=3) for _ in range(m)]
    verdict = rkt_convex_check(b, bodies, k, MinkowskiCombiner([b, *bodies]))
    return {"B": b, "bodies": bodies, "k": k}, verdict


def _random_partition(rng: random.Random, size: int, e_max: int) -> Partition:
    options = list(partitions_of(size, e_max))
    parts = rng.choice(options)
    e = rng.randint(max(1, parts[0] if parts else 1), e_max)
    return Partition(parts, e)


def schur_af_trial(rng: random.Random, settings: FuzzSettings, seed: int):
    n = rng.randint(3, min(4, max(3, settings.max_dim)))
    total = n - 2
    p = rng.randint(1, total)
    sizes = [1] * p
    for _ in range(total - p):
        sizes[rng.randrange(p)] += 1
    tuples = []
    for size in sizes:
        lam = _random_partition(rng, size, 2)
        bodies = tuple(random_polytope(rng, n, settings, max_vertices=n + 1)
                       for _ in range(lam.e))
        tuples.append((lam, bodies))
    spec = SchurValuationSpec(tuple(tuples))
    m_body = random_polytope(rng, n, settings, max_vertices=n + 1)
    n_body = random_polytope(rng, n, settings, max_vertices=n + 1)
    return {"spec": spec, "M": m_body, "N": n_body}, schur_af_check(spec, m_body, n_body)


def md_signature_trial(rng: random.Random, settings: FuzzSettings, seed: int):
    n = rng.randint(2, min(4, max(2, settings.max_dim)))
    m = rng.randint(2, n)
    hypothesis = [random_pd_matrix(rng, n) for _ in range(m - 2)]
    w = random_pd_matrix(rng, n)
    gram = md_hodge_form(hypothesis, w, m)
    signature = inertia(gram)
    expected = (1, 0, n * (n + 1) // 2 - 1)
    if signature.as_tuple() != expected:
        verdict = Verdict.failed({"n": n, "m": m, "inertia": signature})
    else:
        verdict = Verdict.passed(inertia=signature)
    a = random_pd_matrix(rng, n)
    b = random_symmetric_matrix(rng, n)
    fixed = [*hypothesis] + [w] * (n - m)
    verdict = verdict.combine_with(md_af_check(a, b, fixed))
    payload = {"A": hypothesis, "W": w, "m": m, "af_pair": [a, b]}
    return payload, verdict


def polymatroid_trial(rng: random.Random, settings: FuzzSettings, seed: int):
    """Axioms of the nd rank function, and nd against the affine-dimension oracle."""
    n = rng.randint(2, min(4, max(2, settings.max_dim)))
    s = rng.randint(1, 6 if n < 4 else 4)
    m = rng.randint(1, n)
    bodies = []
    for _ in range(s):
        if rng.random() < 0.5:
            bodies.append(segment(*random_vertices(rng, n, 2, settings)))
        else:
            bodies.append(random_body(rng, n, settings, max_vertices=3))
        if bodies[-1].dim == 0:
            bodies[-1] = random_body(rng, n, settings, max_vertices=3)
    oracle = RankOracle(GroundSet(tuple(bodies), m))
    verdict = check_polymatroid(oracle)
    for mask in range(1, 1 << s):
        subset = [bodies[i] for i in range(s) if mask >> i & 1]
        expected = nd_by_dimension(minkowski_total(subset), oracle.ground)
        actual = oracle.rank_of_mask(mask)
        if actual != expected:
            verdict = Verdict.failed({"reason": "nd disagrees with dimension oracle",
                                      "mask": mask, "nd": actual, "expected": expected})
            break
    return {"ground": oracle.ground}, verdict


def discriminant_lorentzian_trial(rng: random.Random, settings: FuzzSettings, seed: int):
    """D((x_1 A_1 + ... + x_k A_k)[m], W[n-m]) is Lorentzian and satisfies rKT."""
    n = rng.randint(2, min(4, max(2, settings.max_dim)))
    m = rng.randint(1, n)
    matrices = [random_pd_matrix(rng, n) for _ in range(rng.randint(1, 3))]
    w = random_pd_matrix(rng, n)
    f = discriminant_polynomial(matrices, w, m)
    points = [random_point(rng, f.nvars, settings) for _ in range(settings.points_per_instance)]
    plan = SweepPlan(mode="auto", samples=settings.sample_splittings, seed=seed)
    verdict = is_lorentzian(f).combine_with(
        rkt_sweep(f, points, plan=plan, max_splittings=settings.max_splittings))
    return {"A": matrices, "W": w, "m": m, "poly": f, "points": points}, verdict


def schur_volume_trial(rng: random.Random, settings: FuzzSettings, seed: int):
    """V((x_1 L_1 + ... + x_k L_k)[m], s_lam(E)) is Lorentzian."""
    n = 3
    m = rng.randint(1, 2)
    lam = _random_partition(rng, n - m, 2)
    spec = SchurValuationSpec(((lam, tuple(random_polytope(rng, n, settings, max_vertices=5)
                                           for _ in range(lam.e))),))
    bodies = [random_polytope(rng, n, settings, max_vertices=5) for _ in range(rng.randint(1, 2))]
    f = schur_volume_polynomial(spec, bodies, m)
    return {"spec": spec, "bodies": bodies, "m": m, "poly": f}, is_lorentzian(f)


@dataclass
class FuzzRun:
    mode: str
    seed: int
    outcomes: list[TrialOutcome] = field(default_factory=list)
    budget_exhausted: bool = False

    @property
    def violations(self) -> list[TrialOutcome]:
        return [o for o in self.outcomes if not o.verdict.holds]

    @property
    def holds(self) -> bool:
        return not self.violations

    def families(self) -> dict[str, int]:
        """Trials per instance family, for modes that draw from the Lorentzian corpus."""
        return dict(sorted(Counter(o.family for o in self.outcomes if o.family).items()))

    def max_ratio(self) -> Optional[Fraction]:
        ratios = [o.verdict.details.get("max_ratio") for o in self.outcomes]
        ratios = [r for r in ratios if r is not None]
        return max(ratios) if ratios else None

    def summary(self) -> dict[str, Any]:
        margins = [o.verdict.margin for o in self.outcomes if o.verdict.margin is not None]
        families, ratio = self.families(), self.max_ratio()
        extra: dict[str, Any] = {}
        if families:
            extra["families"] = families
        if ratio is not None:
            extra["max_ratio"] = ratio
        return {
            "mode": self.mode,
            "seed": self.seed,
            "trials": len(self.outcomes),
            "violations": len(self.violations),
            "checked": sum(o.verdict.checked for o in self.outcomes),
            "min_margin": min(margins) if margins else None,
            "first_violation": self.violations[0].trial if self.violations else None,
            "budget_exhausted": self.budget_exhausted,
            "holds": self.holds,
            **extra,
        }

    def corpus_digest(self) -> str:
        joined = "\n".join(o.digest for o in self.outcomes)
        return hashlib.sha256(joined.encode("utf-8")).hexdigest()


def run_trial(job: tuple[TrialFunction, int, int, FuzzSettings]) -> TrialOutcome:
    trial_fn, seed, trial, settings = job
    rng = trial_rng(seed, trial)
    payload, verdict = trial_fn(rng, settings, trial_seed(seed, trial))
    return TrialOutcome(trial, instance_digest(payload), verdict, payload.get("family"))


def run_fuzz(mode: str, trial_fn: TrialFunction, seed: int, trials: int,
             settings: Optional[FuzzSettings] = None, workers: int = 1,
             budget_ms: Optional[int] = None) -> FuzzRun:
    """Run trials 0..trials-1 in order.

    With ``budget_ms`` the trials are dispatched in batches and no new batch
    starts once the budget is spent; the run then covers a prefix of the corpus.
    """
    if trials < 1:
        raise VerifierInputError("trials must be at least 1", "trials")
    settings = settings or FuzzSettings()
    jobs = [(trial_fn, seed, t, settings) for t in range(trials)]
    run = FuzzRun(mode, seed)
    if budget_ms is None:
        run.outcomes = ordered_map(run_trial, jobs, workers)
    else:
        batch = max(1, workers) * 4
        started = time.monotonic()
        for start in range(0, trials, batch):
            if (time.monotonic() - started) * 1000 >= budget_ms:
                run.budget_exhausted = True
                logger.info(f"fuzz {mode}: budget of {budget_ms} ms spent after {start} trials")
                break
            run.outcomes.extend(ordered_map(run_trial, jobs[start:start + batch], workers))
    summary = run.summary()
    logger.info(f"fuzz {mode}: {summary['trials']} trials, {summary['violations']} violations")
    for outcome in run.violations:
        logger.warning(f"fuzz {mode} trial {outcome.trial}: {outcome.verdict.witness}")
    return run
