"""
End-to-end tests for the lorentz-verifier CLI.

Each test runs full commands through click against instance files on
disk and reads the JSON report back, the way a user or a CI job would.
"""

import json

import pytest
from click.testing import CliRunner

from lorentz_verifier.cli_full import EXIT_INPUT, EXIT_OK, EXIT_VIOLATION, cli
from lorentz_verifier.convgeom.polytope import bipyramid, unit_segment
from lorentz_verifier.harness.report import strip_timing
from lorentz_verifier.polycore.codec import poly_to_json


@pytest.fixture()
def runner():
    return CliRunner()


def run_json(runner, args):
    result = runner.invoke(cli, [*args, "-q"])
    report = json.loads(result.stdout) if result.stdout.strip() else None
    return result, report


@pytest.mark.e2e
class TestReproductions:
    """Test the named reproductions from the command line."""

    def test_huh_example(self, runner):
        """Test that the planted rKT violation is found and counted as success."""
        result, report = run_json(runner, ["reproduce", "huh-example"])
        assert result.exit_code == EXIT_OK
        checks = report["results"]["checks"]
        assert checks["rkt_optimal"]["holds"] is False
        assert checks["rkt_general"]["holds"] is True
        assert checks["rkt_optimal_e1_e2_2e3"]["margin"] == "-12"

    def test_bipyramid(self, runner):
        """Test the 1-Rayleigh counterexample and the sharp constant."""
        result, report = run_json(runner, ["reproduce", "bipyramid"])
        assert result.exit_code == EXIT_OK
        values = report["results"]["values"]
        assert values["vol_B"] == "8/3"
        assert report["results"]["checks"]["one_rayleigh"]["holds"] is False

    def test_all_fast_reproductions(self, runner):
        """Test the reproductions that finish quickly."""
        for name in ("constants", "convex-rkt", "polymatroid-demo", "volume-lorentzian"):
            result, report = run_json(runner, ["reproduce", name])
            assert result.exit_code == EXIT_OK, name
            assert report["summary"]["matches_expectation"] is True


@pytest.mark.e2e
class TestInstanceFiles:
    """Test checks over instance files."""

    def test_rkt_violation_from_file(self, runner, huh_rkt_file):
        """Test exit code 1 and the planted witness."""
        result, report = run_json(runner, ["check-rkt", huh_rkt_file])
        assert result.exit_code == EXIT_VIOLATION
        witness = report["results"]["verdict"]["witness"]
        assert witness["point_index"] == 0
        assert report["inputs"][huh_rkt_file]

    def test_general_constant_passes(self, runner, huh_rkt_file, write_instance, huh):
        """Test that the same instance passes with the general constant."""
        path = write_instance("huh_general.json", {
            "poly": poly_to_json(huh), "points": [["1", "0", "0"]], "sweep": "full"})
        result, report = run_json(runner, ["check-rkt", path])
        assert result.exit_code == EXIT_OK
        assert report["summary"]["checked"] == 84

    def test_full_sweep_over_budget(self, runner, huh_rkt_file, tmp_path):
        """Test that an exhaustive sweep past the budget is an input error."""
        settings = tmp_path / "tight.settings"
        settings.write_text("max_splittings=10\n")
        result = runner.invoke(cli, ["check-rkt", huh_rkt_file, "--config", str(settings), "-q"])
        assert result.exit_code == EXIT_INPUT

    def test_malformed_json(self, runner, tmp_path):
        """Test that a broken instance file exits 2 without a report."""
        path = tmp_path / "broken.json"
        path.write_text("{\"poly\": ")
        result = runner.invoke(cli, ["check-lorentzian", str(path), "-q"])
        assert result.exit_code == EXIT_INPUT
        assert result.stdout == ""
        assert "invalid JSON" in result.stderr

    def test_float_coefficient(self, runner, write_instance):
        """Test that floats are rejected at the boundary."""
        path = write_instance("float.json", {
            "nvars": 1, "degree": 1, "terms": [{"exp": [1], "coef": 0.5}]})
        result = runner.invoke(cli, ["check-lorentzian", path, "-q"])
        assert result.exit_code == EXIT_INPUT

    def test_volume_polynomial_of_bipyramid(self, runner, write_instance):
        """Test that the volume polynomial of a body and segments is Lorentzian."""
        bodies = [bipyramid(), unit_segment(3, 0), unit_segment(3, 1)]
        path = write_instance("bodies.json", {"bodies": [b.to_json() for b in bodies]})
        result, report = run_json(runner, ["volume-poly", path])
        assert result.exit_code == EXIT_OK
        assert report["results"]["poly"]["degree"] == 3


@pytest.mark.e2e
class TestFuzzDeterminism:
    """Test that fuzz reports are reproducible byte for byte."""

    @pytest.fixture(autouse=True)
    def small_instances(self, isolated_environment, monkeypatch):
        """Keep generated polytopes small through the environment layer."""
        monkeypatch.setenv("LORENTZ_VERIFIER_MAX_DIM", "2")
        monkeypatch.setenv("LORENTZ_VERIFIER_MAX_VERTICES", "5")

    def test_same_seed_same_report(self, runner, tmp_path):
        """Test identical reports apart from timing across two runs."""
        texts = []
        for name in ("first.json", "second.json"):
            out = tmp_path / name
            result = runner.invoke(cli, ["fuzz", "pr", "--trials", "4", "--seed", "8",
                                         "-o", str(out), "-q"])
            assert result.exit_code == EXIT_OK
            texts.append(json.dumps(strip_timing(json.loads(out.read_text())), sort_keys=True))
        assert texts[0] == texts[1]

    def test_seed_changes_corpus(self, runner):
        """Test that a different seed gives a different corpus digest."""
        digests = []
        for seed in ("1", "2"):
            result, report = run_json(runner, ["fuzz", "supermod", "--trials", "2",
                                               "--seed", seed])
            assert result.exit_code == EXIT_OK
            digests.append(report["inputs"]["corpus"])
        assert digests[0] != digests[1]

    def test_budget_reports_prefix(self, runner):
        """Test that a budget still yields a valid report."""
        result, report = run_json(runner, ["fuzz", "supermod", "--trials", "2",
                                           "--budget-ms", "60000"])
        assert result.exit_code == EXIT_OK
        assert report["summary"]["budget_exhausted"] is False
        assert report["summary"]["trials"] == 2

    def test_settings_file_and_environment(self, runner, tmp_path, monkeypatch):
        """Test that the seed comes from the environment over the settings file."""
        settings = tmp_path / "run.settings"
        settings.write_text("seed=3\ntrials=2\n")
        monkeypatch.setenv("LORENTZ_VERIFIER_SEED", "4")
        result, report = run_json(runner, ["fuzz", "supermod", "--config", str(settings)])
        assert result.exit_code == EXIT_OK
        assert report["summary"]["seed"] == 4
        assert report["summary"]["trials"] == 2
