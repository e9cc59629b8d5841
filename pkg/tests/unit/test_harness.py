"""Unit tests for the fuzz harness, reproductions, registries and reports."""

import csv
import json
from fractions import Fraction

import pytest

from lorentz_verifier.errors import VerifierInputError
from lorentz_verifier.harness import fuzz
from lorentz_verifier.harness.fuzz import (
    LORENTZIAN_FAMILIES,
    FuzzRun,
    FuzzSettings,
    TrialOutcome,
    fuzz_corpus,
    instance_digest,
    lorentzian_instance,
    random_pd_matrix,
    run_fuzz,
    trial_rng,
    trial_seed,
)
from lorentz_verifier.harness.pool import ordered_map, resolve_workers
from lorentz_verifier.harness.registry import CheckerRegistry, ReproductionRegistry
from lorentz_verifier.harness.report import (
    CSV_COLUMNS,
    Stopwatch,
    build_report,
    fuzz_report,
    strip_timing,
    write_margin_csv,
    write_report,
)
from lorentz_verifier.harness.reproduce import (
    ReproductionResult,
    huh_polynomial,
    reproduce_md_signature,
    reproduce_schur_examples,
)
from lorentz_verifier.lorentz.membership import is_lorentzian
from lorentz_verifier.lorentz.verdict import Verdict


def coin_trial(rng, settings, seed):
    """Draw one number and pass with it as the margin."""
    value = Fraction(rng.randint(0, 100), 7)
    return {"value": value}, Verdict.passed(margin=value)


def tagged_trial(rng, settings, seed):
    """Tag the payload with a family and report a ratio in the details."""
    family = rng.choice(["left", "right"])
    ratio = Fraction(rng.randint(1, 20), 10)
    return {"family": family, "ratio": ratio}, Verdict.passed(max_ratio=ratio)


def odd_fails_trial(rng, settings, seed):
    """Fail on odd trial seeds."""
    if seed % 2:
        return {"seed": seed}, Verdict.failed({"seed": seed}, margin=Fraction(-1))
    return {"seed": seed}, Verdict.passed(margin=Fraction(1))


class TestSeeding:
    """Test per-trial seeding and digests."""

    def test_trial_seed(self):
        """Test that trial seeds are spread by a fixed stride."""
        assert trial_seed(0, 5) == 5
        assert trial_seed(1, 2) == 1_000_005

    def test_trial_rng_is_independent_of_order(self):
        """Test that a trial can be regenerated on its own."""
        first = [trial_rng(3, t).random() for t in range(4)]
        assert trial_rng(3, 2).random() == first[2]

    def test_instance_digest_is_canonical(self):
        """Test that key order does not change the digest."""
        assert instance_digest({"a": 1, "b": Fraction(1, 2)}) == \
            instance_digest({"b": Fraction(1, 2), "a": 1})
        assert len(instance_digest({})) == 64

    def test_random_pd_matrix(self):
        """Test that generated matrices are positive definite."""
        rng = trial_rng(0, 0)
        for n in (2, 3):
            assert random_pd_matrix(rng, n).is_positive_definite()


class TestRunFuzz:
    """Test fuzz runs over simple trial functions."""

    def test_deterministic(self):
        """Test that two runs with one seed give the same corpus."""
        first = run_fuzz("coin", coin_trial, seed=11, trials=6)
        second = run_fuzz("coin", coin_trial, seed=11, trials=6)
        assert first.corpus_digest() == second.corpus_digest()
        assert [o.verdict.margin for o in first.outcomes] == \
            [o.verdict.margin for o in second.outcomes]
        assert run_fuzz("coin", coin_trial, seed=12, trials=6).corpus_digest() != \
            first.corpus_digest()

    def test_summary(self):
        """Test violation counting and the first failing trial."""
        run = run_fuzz("odd", odd_fails_trial, seed=0, trials=4)
        summary = run.summary()
        assert summary["trials"] == 4
        assert summary["violations"] == 2
        assert summary["first_violation"] == 1
        assert summary["min_margin"] == -1
        assert summary["holds"] is False
        assert summary["budget_exhausted"] is False

    def test_trials_must_be_positive(self):
        """Test that an empty run is rejected."""
        with pytest.raises(VerifierInputError):
            run_fuzz("coin", coin_trial, seed=0, trials=0)

    def test_budget_yields_prefix(self, monkeypatch):
        """Test that a spent budget stops dispatching new batches."""
        clock = iter([0.0, 0.0])
        monkeypatch.setattr(fuzz.time, "monotonic", lambda: next(clock, 10.0))
        run = run_fuzz("coin", coin_trial, seed=0, trials=8, budget_ms=5)
        assert len(run.outcomes) == 4
        assert run.budget_exhausted
        assert [o.trial for o in run.outcomes] == [0, 1, 2, 3]

    def test_outcome_json(self):
        """Test that outcomes carry trial, digest and verdict fields."""
        outcome = TrialOutcome(3, "abc", Verdict.passed(margin=Fraction(1, 2)))
        assert outcome.to_json() == {"trial": 3, "digest": "abc", "holds": True,
                                     "checked": 1, "margin": "1/2", "witness": None}

    def test_families_and_max_ratio(self):
        """Test that payload families and reported ratios reach the summary."""
        run = run_fuzz("tagged", tagged_trial, seed=2, trials=12)
        summary = run.summary()
        assert sum(summary["families"].values()) == 12
        assert set(summary["families"]) <= {"left", "right"}
        assert summary["max_ratio"] == max(o.verdict.details["max_ratio"] for o in run.outcomes)
        assert run.outcomes[0].to_json()["family"] in ("left", "right")

    def test_summary_without_families(self):
        """Test that modes without families or ratios keep the plain summary."""
        summary = run_fuzz("coin", coin_trial, seed=0, trials=3).summary()
        assert "families" not in summary
        assert "max_ratio" not in summary

    def test_empty_run_summary(self):
        """Test the summary of a run with no outcomes."""
        summary = FuzzRun("none", 0).summary()
        assert summary["min_margin"] is None
        assert summary["holds"] is True


class TestCorpus:
    """Test the generated instance stream."""

    SETTINGS = FuzzSettings(points_per_instance=2, max_vars=3, max_degree=3, max_dim=2,
                            max_vertices=4)

    def test_same_seed_same_stream(self):
        """Test that the stream depends only on the seed."""
        first = [instance_digest(i) for i in fuzz_corpus(5, 3, self.SETTINGS)]
        second = [instance_digest(i) for i in fuzz_corpus(5, 3, self.SETTINGS)]
        other = [instance_digest(i) for i in fuzz_corpus(6, 3, self.SETTINGS)]
        assert first == second
        assert first != other

    def test_instances(self):
        """Test that every generated polynomial is Lorentzian and the points fit it."""
        for instance in fuzz_corpus(0, 6, self.SETTINGS):
            f = instance["poly"]
            assert instance["family"] in LORENTZIAN_FAMILIES
            assert is_lorentzian(f).holds
            assert len(instance["points"]) == 2
            assert all(len(p) == f.nvars and min(p) >= 0 for p in instance["points"])
            assert all(len(t) == 3 for t in instance["triples"])

    def test_corpus_is_what_the_trials_check(self):
        """Test that corpus instance t is the instance trial t of the rkt mode draws."""
        entries = list(fuzz_corpus(3, 2, self.SETTINGS))
        payload, _ = fuzz.rkt_trial(trial_rng(3, 1), self.SETTINGS, trial_seed(3, 1))
        assert payload == {k: v for k, v in entries[1].items() if k != "trial"}

    def test_trials_must_be_positive(self):
        """Test that an empty corpus is rejected."""
        with pytest.raises(VerifierInputError):
            list(fuzz_corpus(0, 0))


class TestLorentzianInstances:
    """Test the shared Lorentzian instance generator."""

    SETTINGS = FuzzSettings(points_per_instance=1, max_vars=3, max_degree=3, max_dim=2,
                            max_vertices=4)

    def test_every_draw_is_lorentzian(self):
        """Test that each family returns a Lorentzian polynomial."""
        for t in range(12):
            family, f = lorentzian_instance(trial_rng(8, t), self.SETTINGS)
            assert family in LORENTZIAN_FAMILIES
            assert is_lorentzian(f).holds, (family, f)

    def test_minimum_degree(self):
        """Test that min_degree=2 never yields a linear form."""
        for t in range(12):
            _, f = lorentzian_instance(trial_rng(9, t), self.SETTINGS, min_degree=2)
            assert f.degree >= 2

    def test_volume_instances_follow_settings(self, monkeypatch):
        """Test that dimension, body count and vertex cap come from the settings."""
        monkeypatch.setattr(fuzz, "volume_polynomial", lambda bodies: len(bodies))
        settings = FuzzSettings(max_dim=4, max_vertices=7)
        dims, counts = set(), set()
        for t in range(60):
            bodies, k = fuzz._volume_instance(trial_rng(4, t), settings)
            dims.add(bodies[0].ambient_dim)
            counts.add(k)
            assert all(len(b.vertices) <= 7 and b.dim == b.ambient_dim for b in bodies)
        assert dims == {2, 3, 4}
        assert counts == {1, 2, 3, 4}

    def test_rayleigh_uses_constant_one_in_two_variables(self):
        """Test that polynomials in at most two variables are also checked at c = 1."""
        settings = FuzzSettings(points_per_instance=2, max_vars=2, max_degree=3, max_dim=2,
                                max_vertices=4)
        small = 0
        for t in range(16):
            payload, verdict = fuzz.rayleigh_trial(trial_rng(6, t), settings, trial_seed(6, t))
            assert verdict.holds
            if payload["poly"].nvars <= 2:
                small += 1
                assert verdict.details["c"] == 1
        assert small > 0

    def test_convex_pr_records_a_ratio(self):
        """Test that the convex ratio is reported and never asserted."""
        settings = FuzzSettings(max_dim=2)
        for t in range(3):
            payload, verdict = fuzz.convex_pr_trial(trial_rng(1, t), settings, trial_seed(1, t))
            assert verdict.holds
            assert verdict.details["max_ratio"] > 0
            assert set(payload) == {"A", "B", "C"}


class TestRegistries:
    """Test mode and reproduction lookup."""

    def test_modes(self):
        """Test that the property modes are registered."""
        registry = CheckerRegistry()
        for mode in ("rkt", "pr", "supermod", "rayleigh", "af-form", "volume-lorentzian",
                     "mixed-volume", "convex-rkt", "convex-pr", "schur-af", "md-signature",
                     "polymatroid"):
            assert mode in registry.get_available_modes()
        assert registry.get_trial("rkt") is fuzz.rkt_trial

    def test_unknown_mode(self):
        """Test that unknown names are input errors."""
        with pytest.raises(VerifierInputError, match="Unknown fuzz mode"):
            CheckerRegistry().get_trial("nope")
        with pytest.raises(VerifierInputError, match="Unknown reproduction"):
            ReproductionRegistry().run("nope")

    def test_mode_info(self):
        """Test the mode summary taken from the trial docstring."""
        info = CheckerRegistry().get_mode_info("rkt-volume")
        assert info["function"] == "rkt_volume_trial"
        assert info["summary"].startswith("rKT with the binomial constant")

    def test_register(self):
        """Test adding a mode."""
        registry = CheckerRegistry()
        registry.register("coin", coin_trial)
        assert registry.get_trial("coin") is coin_trial


class TestReproductions:
    """Test the fixed reproductions."""

    @pytest.mark.parametrize("name", [
        "huh-example", "bipyramid", "polymatroid-demo", "volume-lorentzian",
        "convex-rkt", "constants",
    ])
    def test_matches_expectation(self, name):
        """Test that each reproduction gives exactly its expected outcomes."""
        result = ReproductionRegistry().run(name)
        assert result.matches_expectation
        assert result.violation_found == result.expected_violation

    def test_small_schur_examples(self):
        """Test the Schur identities over a reduced range."""
        result = reproduce_schur_examples(max_size=3, max_e=3)
        assert result.matches_expectation
        assert not result.violation_found
        assert result.values["partitions_compared"] > 0
        assert result.checks["segre k=2 e=3"].holds
        assert result.checks["segre k=3 e=3"].holds

    def test_small_md_signature(self):
        """Test the mixed discriminant signatures for n <= 3."""
        result = reproduce_md_signature(max_n=3)
        assert result.matches_expectation
        assert result.checks["schur form n=3 lambda=(1,)"].holds

    def test_convex_rkt_includes_projected_form(self):
        """Test the structuring-body form on the cube, met with equality."""
        result = ReproductionRegistry().run("convex-rkt")
        assert result.checks["quermass cube k=0"].margin == 0
        assert result.checks["quermass equality"].holds

    def test_constants_include_intersection_forms(self):
        """Test binom(d, k) and 2^(k(d-k)) in intersection-number form."""
        result = ReproductionRegistry().run("constants")
        assert result.checks["intersection d=4 k=2"].details["value"] == 6
        assert result.checks["intersection general d=4 k=1"].details["value"] == 8
        assert all(v.holds for k, v in result.checks.items() if k.startswith("intersection"))

    def test_huh_polynomial_is_lorentzian(self):
        """Test the planted cubic."""
        assert is_lorentzian(huh_polynomial()).holds

    def test_mismatch_detected(self):
        """Test that an unexpected outcome breaks the expectation."""
        result = ReproductionResult("demo", expected_violation=False)
        result.expect("ok", Verdict.passed())
        result.expect("should fail", Verdict.passed(), holds=False)
        assert not result.matches_expectation
        data = result.to_json()
        assert data["checks"]["should fail"]["expected_holds"] is False


class TestReports:
    """Test report assembly and output files."""

    def test_report_keys(self):
        """Test the top-level layout and the header."""
        report = build_report("check-rkt", {"holds": True}, {"holds": True},
                              inputs={"poly": "abc"}, stopwatch=Stopwatch())
        assert set(report) == {"header", "inputs", "results", "summary", "timing"}
        assert report["header"]["tool"] == "lorentz-verifier"
        assert "elapsed_ms" in report["timing"]
        assert "timing" not in strip_timing(report)

    def test_write_report(self, tmp_path):
        """Test that the written file and the returned text agree."""
        report = build_report("demo", [Fraction(1, 3)], {})
        out = tmp_path / "nested" / "report.json"
        text = write_report(report, out)
        assert out.read_text() == text
        assert json.loads(text)["results"] == ["1/3"]
        assert write_report(report, None) == text

    def test_fuzz_report_is_reproducible(self):
        """Test that identical runs give identical reports without timing."""
        reports = [fuzz_report(run_fuzz("coin", coin_trial, seed=5, trials=3), "fuzz")
                   for _ in range(2)]
        assert write_report(strip_timing(reports[0]), None) == \
            write_report(strip_timing(reports[1]), None)
        assert "corpus" in reports[0]["inputs"]

    def test_margin_csv(self, tmp_path):
        """Test the CSV header and one row per trial."""
        run = run_fuzz("odd", odd_fails_trial, seed=0, trials=3)
        path = tmp_path / "margins.csv"
        write_margin_csv(run, path)
        with open(path, newline="") as handle:
            rows = list(csv.reader(handle))
        assert rows[0] == CSV_COLUMNS
        assert len(rows) == 4
        assert rows[2][1] == "false"
        assert rows[2][2] == "-1"


class TestPool:
    """Test worker resolution and ordered mapping."""

    def test_resolve_workers(self, monkeypatch):
        """Test explicit values, the environment and the range check."""
        assert resolve_workers() == 1
        assert resolve_workers(4) == 4
        monkeypatch.setenv("LORENTZ_VERIFIER_WORKERS", "3")
        assert resolve_workers() == 3
        with pytest.raises(VerifierInputError):
            resolve_workers(0)
        monkeypatch.setenv("LORENTZ_VERIFIER_WORKERS", "many")
        with pytest.raises(VerifierInputError):
            resolve_workers()

    def test_ordered_map_in_process(self):
        """Test that a single worker maps in order."""
        assert ordered_map(abs, [-3, 2, -1]) == [3, 2, 1]
