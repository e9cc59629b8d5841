"""Unit tests for the inequality catalog: constants, checkers and sweeps."""

from fractions import Fraction

import pytest

from lorentz_verifier.errors import BudgetError, VerifierInputError
from lorentz_verifier.ineq.checkers import (
    RktInstance,
    af_form_check,
    empirical_pr_ratio,
    pr_check,
    quasi_log_submodular_check,
    rkt_check,
    rkt_optimal_check,
    supermodularity_check,
)
from lorentz_verifier.ineq.constants import (
    intersection_form_constant,
    pr_constant,
    rkt_constant,
    rkt_optimal_constant,
)
from lorentz_verifier.ineq.sweep import (
    SweepPlan,
    af_form_sweep,
    pr_ratio_sweep,
    pr_sweep,
    rkt_sweep,
    splitting_count,
    supermodularity_sweep,
    sweep_splittings,
)
from lorentz_verifier.polycore.polynomial import HomPoly

E1 = (1, 0, 0)
E2 = (0, 1, 0)
TWO_E3 = (0, 0, 2)


class TestConstants:
    """Test the exact constants."""

    @pytest.mark.parametrize("d,expected", [
        (2, Fraction(1)), (3, Fraction(4, 3)), (4, Fraction(8, 3)), (5, Fraction(32, 5)),
    ])
    def test_pr_constant(self, d, expected):
        """Test c_d for small degrees."""
        assert pr_constant(d) == expected

    def test_rkt_constants(self):
        """Test the general and binomial constants."""
        assert rkt_constant(3, 1, 1) == Fraction(4, 3)
        assert rkt_constant(3, 1, 2) == Fraction(4, 3)
        assert rkt_optimal_constant(3, 1, 2) == 1
        for d in range(2, 7):
            assert rkt_optimal_constant(d, 1, 1) == 2 * (1 - Fraction(1, d))
            assert rkt_optimal_constant(d, 2, d - 2) == 1

    def test_zero_length_splitting(self):
        """Test that |beta| = 0 gives the trivial constant."""
        assert rkt_constant(4, 0, 3) == 1
        assert rkt_optimal_constant(4, 0, 3) == 1

    def test_invalid_lengths(self):
        """Test that |beta| + |gamma| > d is rejected."""
        with pytest.raises(VerifierInputError):
            rkt_constant(2, 2, 1)
        with pytest.raises(VerifierInputError):
            rkt_optimal_constant(3, -1, 1)

    def test_intersection_form(self):
        """Test the intersection-number rewriting."""
        assert intersection_form_constant(4, 1) == 4
        assert intersection_form_constant(4, 2) == 6
        assert intersection_form_constant(4, 1, optimal=False) == 2 ** 3


class TestRktChecks:
    """Test single rKT instances."""

    def test_huh_breaks_optimal_constant(self, huh):
        """Test the planted instance x = e1, beta = e2, gamma = 2 e3."""
        inst = RktInstance(huh, E1, E2, TWO_E3)
        verdict = rkt_optimal_check(inst)
        assert not verdict.holds
        assert verdict.witness["lhs"] == 84
        assert verdict.witness["rhs"] == 72
        assert verdict.margin == -12

    def test_huh_satisfies_general_constant(self, huh):
        """Test the same instance with the general constant 4/3."""
        verdict = rkt_check(RktInstance(huh, E1, E2, TWO_E3))
        assert verdict.holds
        assert verdict.margin == 12

    def test_alpha(self, huh):
        """Test that alpha is beta + gamma."""
        assert RktInstance(huh, E1, E2, TWO_E3).alpha == (0, 1, 2)

    def test_invalid_instances(self, huh):
        """Test input validation of instances."""
        with pytest.raises(VerifierInputError):
            RktInstance(huh, (1, -1, 0), E2, E2)
        with pytest.raises(VerifierInputError):
            RktInstance(huh, E1, (0, 2, 0), TWO_E3)
        with pytest.raises(VerifierInputError):
            RktInstance(huh, E1, (0, -1, 0), E2)


class TestTripleChecks:
    """Test the Pluennecke-Ruzsa and supermodularity checkers."""

    def test_pr_holds(self, x1x2):
        """Test x1 x2 with c_2 = 1."""
        verdict = pr_check(x1x2, [1, 0], [0, 1], [0, 1])
        assert verdict.holds
        assert verdict.margin == 1

    def test_pr_fails_outside_class(self, sum_of_squares):
        """Test x1^2 + x2^2, which is not Lorentzian."""
        verdict = pr_check(sum_of_squares, [1, 0], [0, 1], [0, 1])
        assert not verdict.holds
        assert verdict.margin == -1

    def test_pr_ratio(self, x1x2):
        """Test the empirical ratio and its undefined case."""
        assert empirical_pr_ratio(x1x2, [1, 1], [1, 0], [0, 1]) == Fraction(4, 4)
        assert empirical_pr_ratio(x1x2, [0, 0], [1, 0], [1, 0]) is None
        detailed = quasi_log_submodular_check(x1x2, [1, 1], [1, 0], [0, 1])
        assert detailed.details["ratio"] == 1
        assert detailed.details["constant"] == 1

    def test_supermodularity(self, x1x2):
        """Test supermodularity and a violation by a negative form."""
        assert supermodularity_check(x1x2, [0, 0], [1, 0], [0, 1]).margin == 1
        verdict = supermodularity_check(-x1x2, [0, 0], [1, 0], [0, 1])
        assert not verdict.holds
        assert verdict.margin == -1

    def test_negative_vectors_rejected(self, x1x2):
        """Test that x, y, z must be nonnegative."""
        with pytest.raises(VerifierInputError):
            pr_check(x1x2, [1, 0], [-1, 0], [0, 1])


class TestAfForm:
    """Test the Alexandrov-Fenchel form of the polarization."""

    def test_holds_for_lorentzian(self, x1x2):
        """Test x1 x2 with a mixed-sign first vector."""
        verdict = af_form_check(x1x2, [[1, -1], [1, 1]])
        assert verdict.holds
        assert verdict.margin == 1

    def test_fails_for_positive_definite_form(self, sum_of_squares):
        """Test x1^2 + x2^2, whose form is positive definite."""
        verdict = af_form_check(sum_of_squares, [[1, -1], [1, 1]])
        assert not verdict.holds
        assert verdict.margin == -4

    def test_validation(self, x1x2):
        """Test vector count and degree checks."""
        with pytest.raises(VerifierInputError):
            af_form_check(x1x2, [[1, 0]])
        with pytest.raises(VerifierInputError):
            af_form_check(HomPoly.linear_form([1, 1]), [[1, 0]])
        with pytest.raises(VerifierInputError):
            af_form_check(x1x2, [[1, 0], [-1, 1]])


class TestSweeps:
    """Test splitting enumeration and sweeps."""

    def test_splitting_count(self):
        """Test binom(2n + d, d) against enumeration."""
        assert splitting_count(1, 1) == 3
        assert splitting_count(3, 3) == 84
        assert len(sweep_splittings(3, 3, SweepPlan(mode="full"))) == 84

    def test_full_sweep_over_budget(self):
        """Test that an exhaustive sweep never silently samples."""
        with pytest.raises(BudgetError):
            sweep_splittings(3, 3, SweepPlan(mode="full"), max_splittings=10)

    def test_auto_sweep_samples_over_budget(self):
        """Test that auto falls back to a seeded sample."""
        plan = SweepPlan(mode="auto", samples=5, seed=7)
        chosen = sweep_splittings(3, 3, plan, max_splittings=10)
        assert len(chosen) == 5
        assert chosen == sweep_splittings(3, 3, plan, max_splittings=10)

    def test_plan_parsing(self):
        """Test the CLI and JSON forms of a sweep plan."""
        assert SweepPlan.parse("sample:7", seed=3) == SweepPlan("sample", 7, 3)
        assert SweepPlan.parse("full").mode == "full"
        assert SweepPlan.from_json({"samples": 4, "seed": 9}) == SweepPlan("sample", 4, 9)
        assert SweepPlan.from_json(None, default_seed=2).seed == 2
        with pytest.raises(VerifierInputError):
            SweepPlan.parse("sample:many")
        with pytest.raises(VerifierInputError):
            SweepPlan(mode="everything")

    def test_rkt_sweep_on_product_of_forms(self, x1x2):
        """Test that x1 x2 satisfies rKT everywhere, with equality somewhere."""
        verdict = rkt_sweep(x1x2, [[1, 1], [2, 3]], plan=SweepPlan(mode="full"))
        assert verdict.holds
        assert verdict.margin == 0
        assert verdict.checked == 2 * splitting_count(2, 2)

    def test_rkt_sweep_finds_huh_violation(self, huh):
        """Test the optimal-constant sweep on the Huh cubic."""
        points = [E1, E2, (0, 0, 1), (1, 1, 1)]
        assert rkt_sweep(huh, points, plan=SweepPlan(mode="full")).holds
        verdict = rkt_sweep(huh, points, optimal=True, plan=SweepPlan(mode="full"))
        assert not verdict.holds
        assert verdict.margin < 0
        assert "point_index" in verdict.witness

    def test_triple_sweeps(self, x1x2, sum_of_squares):
        """Test that triple sweeps stop at the first violation."""
        triples = [([1, 1], [1, 0], [0, 1]), ([1, 0], [0, 1], [0, 1])]
        assert pr_sweep(x1x2, triples).holds
        assert supermodularity_sweep(x1x2, triples).checked == 2
        verdict = pr_sweep(sum_of_squares, triples)
        assert not verdict.holds
        assert verdict.witness["point_index"] == 1

    def test_pr_ratio_sweep(self, x1x2, sum_of_squares):
        """Test that the largest observed ratio is reported alongside the verdict."""
        triples = [([1, 1], [1, 0], [0, 1]), ([1, 0], [0, 1], [0, 1])]
        verdict = pr_ratio_sweep(x1x2, triples)
        assert verdict.holds
        assert verdict.details["max_ratio"] == 1
        assert verdict.checked == 2
        assert "max_ratio" not in pr_sweep(x1x2, triples).details
        assert not pr_ratio_sweep(sum_of_squares, triples).holds

    def test_af_form_sweep(self, x1x2):
        """Test a sweep over vector groups."""
        verdict = af_form_sweep(x1x2, [[[1, -1], [1, 1]], [[2, 0], [1, 3]]])
        assert verdict.holds
        assert verdict.checked == 2
