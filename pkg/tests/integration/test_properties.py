"""
Integration tests for the fuzz campaigns.

Each mode generates instances across the polynomial, geometry and
discriminant layers and checks a property that holds as a theorem, so
every trial of a small campaign must pass.
"""

import pytest

from lorentz_verifier.convgeom.mixed import volume_polynomial
from lorentz_verifier.harness.fuzz import (
    LORENTZIAN_FAMILIES,
    FuzzSettings,
    instance_digest,
    random_polytope,
    run_fuzz,
    trial_rng,
)
from lorentz_verifier.harness.registry import CheckerRegistry
from lorentz_verifier.harness.report import fuzz_report, strip_timing
from lorentz_verifier.ineq.sweep import SweepPlan, rkt_sweep
from lorentz_verifier.lorentz.membership import is_lorentzian
from lorentz_verifier.matroid.ground import GroundSet
from lorentz_verifier.matroid.polymatroid import RankOracle, check_polymatroid

CHEAP_MODES = ["rkt", "pr", "supermod", "rayleigh", "af-form", "md-signature"]
GEOMETRY_MODES = ["mixed-volume", "volume-lorentzian", "convex-rkt", "convex-pr", "polymatroid"]
LORENTZIAN_CORPUS_MODES = ["rkt", "pr", "supermod", "rayleigh", "af-form"]


@pytest.mark.integration
class TestFuzzModes:
    """Test that short campaigns find no violations."""

    @pytest.mark.parametrize("mode", CHEAP_MODES)
    def test_polynomial_modes_hold(self, mode, small_settings):
        """Test the polynomial and discriminant properties over a few trials."""
        trial = CheckerRegistry().get_trial(mode)
        run = run_fuzz(mode, trial, seed=1, trials=4, settings=small_settings)
        assert run.holds, run.violations[0].verdict.witness if run.violations else None
        assert len(run.outcomes) == 4

    @pytest.mark.parametrize("mode", GEOMETRY_MODES)
    def test_geometry_modes_hold(self, mode, small_settings):
        """Test the convex-geometry properties over a couple of trials."""
        trial = CheckerRegistry().get_trial(mode)
        run = run_fuzz(mode, trial, seed=3, trials=2, settings=small_settings)
        assert run.holds, run.violations[0].verdict.witness if run.violations else None

    @pytest.mark.slow
    @pytest.mark.parametrize("mode", ["schur-af", "discriminant-lorentzian", "schur-volume",
                                      "rkt-volume"])
    def test_composite_modes_hold(self, mode, small_settings):
        """Test the Schur valuation and discriminant polynomial properties."""
        trial = CheckerRegistry().get_trial(mode)
        run = run_fuzz(mode, trial, seed=5, trials=2, settings=small_settings)
        assert run.holds, run.violations[0].verdict.witness if run.violations else None


@pytest.mark.integration
class TestCorpusFamilies:
    """Test that the polynomial modes check every family of Lorentzian instances."""

    SETTINGS = FuzzSettings(points_per_instance=1, max_vars=3, max_degree=3, max_dim=2,
                            max_vertices=4, sample_splittings=20, max_splittings=200)

    @pytest.mark.parametrize("mode", LORENTZIAN_CORPUS_MODES)
    def test_every_family_is_checked(self, mode):
        """Test linear products, volume polynomials and convex combinations in one campaign."""
        trial = CheckerRegistry().get_trial(mode)
        run = run_fuzz(mode, trial, seed=11, trials=60, settings=self.SETTINGS)
        assert run.holds, run.violations[0].verdict.witness if run.violations else None
        families = run.summary()["families"]
        assert set(families) == set(LORENTZIAN_FAMILIES)
        assert sum(families.values()) == 60

    def test_pr_reports_largest_ratio(self):
        """Test that the pr campaign records its largest observed ratio."""
        trial = CheckerRegistry().get_trial("pr")
        summary = run_fuzz("pr", trial, seed=11, trials=10, settings=self.SETTINGS).summary()
        assert summary["max_ratio"] is not None
        assert summary["max_ratio"] >= 0


@pytest.mark.integration
class TestDeterminism:
    """Test that campaigns are reproducible."""

    def test_same_seed_same_report(self, small_settings):
        """Test byte-identical reports apart from timing."""
        trial = CheckerRegistry().get_trial("pr")
        reports = [strip_timing(fuzz_report(run_fuzz("pr", trial, 9, 5, small_settings), "fuzz pr"))
                   for _ in range(2)]
        assert reports[0] == reports[1]

    def test_workers_do_not_change_results(self, small_settings):
        """Test that a process pool gives the trials in the same order."""
        trial = CheckerRegistry().get_trial("supermod")
        serial = run_fuzz("supermod", trial, 4, 6, small_settings, workers=1)
        parallel = run_fuzz("supermod", trial, 4, 6, small_settings, workers=2)
        assert serial.corpus_digest() == parallel.corpus_digest()
        assert [o.to_json() for o in serial.outcomes] == [o.to_json() for o in parallel.outcomes]

    def test_single_trial_regenerates(self, small_settings):
        """Test that one trial can be rerun on its own."""
        trial = CheckerRegistry().get_trial("rayleigh")
        run = run_fuzz("rayleigh", trial, 2, 3, small_settings)
        payload, _ = trial(trial_rng(2, 2), small_settings, 2 * 1_000_003 + 2)
        assert instance_digest(payload) == run.outcomes[2].digest


@pytest.mark.integration
class TestVolumePolynomials:
    """Test volume polynomials of random polytopes end to end."""

    def test_random_volume_polynomials(self, small_settings):
        """Test that volume polynomials are Lorentzian and satisfy optimal rKT."""
        rng = trial_rng(17, 0)
        bodies = [random_polytope(rng, 2, small_settings, max_vertices=5) for _ in range(2)]
        f = volume_polynomial(bodies)
        assert f.degree == 2
        assert is_lorentzian(f).holds
        verdict = rkt_sweep(f, [(1, 1), (2, 1)], optimal=True, plan=SweepPlan(mode="full"))
        assert verdict.holds

    def test_random_ground_set(self, small_settings):
        """Test the polymatroid axioms on random full-dimensional bodies."""
        rng = trial_rng(23, 0)
        bodies = tuple(random_polytope(rng, 2, small_settings, max_vertices=4) for _ in range(3))
        oracle = RankOracle(GroundSet(bodies, 1))
        verdict = check_polymatroid(oracle)
        assert verdict.holds
        assert oracle.rank([0, 1, 2]) == 1
