"""Sweeps of the catalog checkers over points and (beta, gamma) splittings."""

import random
from dataclasses import dataclass
from fractions import Fraction
from math import comb
from typing import Any, Callable, Iterator, Optional, Sequence

from ..errors import BudgetError, VerifierInputError
from ..lorentz.rayleigh import DerivativeTable
from ..lorentz.verdict import Verdict
from ..polycore.multiindex import MultiIndex, multi_indices_up_to
from ..polycore.polynomial import HomPoly
from ..verifier_logging import get_logger
from .checkers import (
    RktInstance,
    af_form_check,
    pr_check,
    quasi_log_submodular_check,
    rkt_check,
    rkt_optimal_check,
    supermodularity_check,
)

logger = get_logger()

Splitting = tuple[MultiIndex, MultiIndex]


@dataclass(frozen=True)
class SweepPlan:
    """``full`` enumerates every splitting (BudgetError above the budget),
    ``sample`` draws ``samples`` splittings with ``seed``, ``auto`` samples
    only when the full count exceeds the budget."""

    mode: str = "auto"
    samples: int = 1000
    seed: int = 0

    def __post_init__(self):
        if self.mode not in ("auto", "full", "sample"):
            raise VerifierInputError(f"unknown sweep mode {self.mode!r}", "sweep")
        if self.samples < 1:
            raise VerifierInputError("sample count must be positive", "sweep")

    @classmethod
    def from_json(cls, data: Any, default_seed: int = 0) -> "SweepPlan":
        if data is None:
            return cls(seed=default_seed)
        if data == "full":
            return cls(mode="full", seed=default_seed)
        if isinstance(data, dict) and "samples" in data:
            return cls(mode="sample", samples=int(data["samples"]),
                       seed=int(data.get("seed", default_seed)))
        raise VerifierInputError('expected "full" or {"samples": N, "seed": S}', "sweep")

    @classmethod
    def parse(cls, text: str, seed: int = 0) -> "SweepPlan":
        """CLI form: ``full``, ``auto`` or ``sample:N``."""
        if text in ("full", "auto"):
            return cls(mode=text, seed=seed)
        if text.startswith("sample:"):
            try:
                return cls(mode="sample", samples=int(text.split(":", 1)[1]), seed=seed)
            except ValueError:
                pass
        raise VerifierInputError(f"invalid sweep {text!r}; use full, auto or sample:N", "sweep")


def splitting_count(n: int, d: int) -> int:
    """Pairs (beta, gamma) in N^n x N^n with |beta| + |gamma| <= d."""
    return comb(2 * n + d, d)


def _all_splittings(n: int, d: int) -> Iterator[Splitting]:
    for beta in multi_indices_up_to(n, d):
        for gamma in multi_indices_up_to(n, d - sum(beta)):
            yield beta, gamma


def sweep_splittings(n: int, d: int, plan: Optional[SweepPlan] = None,
                     max_splittings: int = 10_000) -> list[Splitting]:
    """Splittings to check, in enumeration order."""
    plan = plan or SweepPlan()
    total = splitting_count(n, d)
    if plan.mode == "full" or (plan.mode == "auto" and total <= max_splittings):
        if total > max_splittings:
            raise BudgetError(
                f"{total} splittings exceed the budget of {max_splittings}; use a sample sweep")
        return list(_all_splittings(n, d))

    samples = min(plan.samples, total)
    chosen = set(random.Random(plan.seed).sample(range(total), samples))
    logger.debug(f"sampling {samples} of {total} splittings (seed {plan.seed})")
    return [s for index, s in enumerate(_all_splittings(n, d)) if index in chosen]


def rkt_sweep(f: HomPoly, points: Sequence[Sequence[Fraction]], optimal: bool = False,
              plan: Optional[SweepPlan] = None, max_splittings: int = 10_000) -> Verdict:
    """rkt_check (or rkt_optimal_check) over every point and splitting.

    The witness is the first violation in (point index, beta, gamma) order.
    """
    check = rkt_optimal_check if optimal else rkt_check
    splittings = sweep_splittings(f.nvars, f.degree, plan, max_splittings)
    checked = 0
    worst: Optional[Fraction] = None
    for index, x in enumerate(points):
        table = DerivativeTable(f, x)
        for beta, gamma in splittings:
            inst = RktInstance(f, tuple(x), beta, gamma)
            verdict = check(inst, table)
            checked += 1
            if not verdict.holds:
                logger.warning(f"rKT violation at point {index}: beta={beta} gamma={gamma}")
                return Verdict.failed({"point_index": index, **verdict.witness},
                                      margin=verdict.margin, checked=checked,
                                      **verdict.details)
            worst = verdict.margin if worst is None else min(worst, verdict.margin)
    return Verdict.passed(margin=worst, checked=checked, splittings=len(splittings))


TripleCheck = Callable[
    [HomPoly, Sequence[Fraction], Sequence[Fraction], Sequence[Fraction]], Verdict]


def triple_sweep(check: TripleCheck, f: HomPoly,
                 triples: Sequence[Sequence[Sequence[Fraction]]]) -> Verdict:
    """Run a checker of (x, y, z) triples, stopping at the first violation.

    When the checker reports a ``ratio`` the largest one is kept as ``max_ratio``.
    """
    checked = 0
    worst: Optional[Fraction] = None
    largest: Optional[Fraction] = None
    for index, (x, y, z) in enumerate(triples):
        verdict = check(f, x, y, z)
        checked += 1
        if not verdict.holds:
            logger.warning(f"{check.__name__} violation at triple {index}")
            return Verdict.failed({"point_index": index, **verdict.witness},
                                  margin=verdict.margin, checked=checked)
        worst = verdict.margin if worst is None else min(worst, verdict.margin)
        ratio = verdict.details.get("ratio")
        if ratio is not None:
            largest = ratio if largest is None else max(largest, ratio)
    if largest is None:
        return Verdict.passed(margin=worst, checked=checked)
    return Verdict.passed(margin=worst, checked=checked, max_ratio=largest)


def pr_sweep(f: HomPoly, triples) -> Verdict:
    return triple_sweep(pr_check, f, triples)


def pr_ratio_sweep(f: HomPoly, triples) -> Verdict:
    """pr_sweep that also reports the largest f(x)f(x+y+z) / (f(x+y)f(x+z)) seen."""
    return triple_sweep(quasi_log_submodular_check, f, triples)


def supermodularity_sweep(f: HomPoly, triples) -> Verdict:
    return triple_sweep(supermodularity_check, f, triples)


def af_form_sweep(f: HomPoly, vector_groups: Sequence[Sequence[Sequence[Fraction]]]) -> Verdict:
    checked = 0
    worst: Optional[Fraction] = None
    for index, vectors in enumerate(vector_groups):
        verdict = af_form_check(f, vectors)
        checked += 1
        if not verdict.holds:
            logger.warning(f"AF form violation at vector group {index}")
            return Verdict.failed({"point_index": index, **verdict.witness},
                                  margin=verdict.margin, checked=checked)
        worst = verdict.margin if worst is None else min(worst, verdict.margin)
    return Verdict.passed(margin=worst, checked=checked)
