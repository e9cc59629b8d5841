"""Unit tests for configuration management."""

from pathlib import Path

import pytest
from pydantic import ValidationError

from lorentz_verifier.config import (
    SETTINGS_FILENAME,
    VerifierConfig,
    create_default_settings_file,
    load_config,
    load_settings_file,
)
from lorentz_verifier.config.config_loader import ConfigLoader


class TestVerifierConfig:
    """Test the VerifierConfig pydantic model."""

    def test_default_values(self):
        """Test that default configuration values are set correctly."""
        config = VerifierConfig()

        assert config.seed == 0
        assert config.trials == 100
        assert config.points_per_instance == 10
        assert config.max_dim == 4
        assert config.max_vertices == 12
        assert config.workers == 1
        assert config.max_splittings == 10_000
        assert config.sample_splittings == 1_000
        assert config.max_ground_set == 12
        assert config.budget_ms is None
        assert config.emit_csv is False
        assert config.log_level == "INFO"

    def test_environment_variable_override(self, monkeypatch):
        """Test that prefixed environment variables are read and coerced."""
        monkeypatch.setenv("LORENTZ_VERIFIER_SEED", "42")
        monkeypatch.setenv("LORENTZ_VERIFIER_EMIT_CSV", "true")

        config = VerifierConfig.from_env()

        assert config.seed == 42
        assert config.emit_csv is True

    def test_empty_environment_value_ignored(self, monkeypatch):
        """Test that an empty variable does not override the default."""
        monkeypatch.setenv("LORENTZ_VERIFIER_TRIALS", "")
        assert VerifierConfig.env_overrides() == {}

    def test_log_level_normalized(self):
        """Test that log levels are upper-cased."""
        assert VerifierConfig(log_level="debug").log_level == "DEBUG"

    def test_log_level_validation(self):
        """Test that unknown log levels are rejected."""
        with pytest.raises(ValidationError):
            VerifierConfig(log_level="LOUD")

    @pytest.mark.parametrize("field,value", [
        ("workers", 0), ("workers", 65), ("trials", 0), ("max_ground_set", 13), ("seed", -1),
        ("max_dim", 1), ("max_vertices", 2),
    ])
    def test_range_validation(self, field, value):
        """Test the numeric bounds."""
        with pytest.raises(ValidationError):
            VerifierConfig(**{field: value})


class TestSettingsFile:
    """Test key=value settings files."""

    def test_missing_file(self, tmp_path):
        """Test that a missing file yields no settings."""
        assert load_settings_file(tmp_path / "absent.settings") == {}

    def test_parsing(self, tmp_path):
        """Test comments, upper-case keys and value coercion."""
        path = tmp_path / SETTINGS_FILENAME
        path.write_text(
            "# comment\n"
            "SEED=7\n"
            "trials = 20  # trailing comment\n"
            "emit_csv=TRUE\n"
            "log_level=debug\n"
            "not a setting\n"
        )
        settings = load_settings_file(path)
        assert settings == {"seed": 7, "trials": 20, "emit_csv": True, "log_level": "debug"}

    def test_default_file_round_trip(self, tmp_path):
        """Test that the generated template loads to the defaults."""
        path = tmp_path / SETTINGS_FILENAME
        create_default_settings_file(path)
        settings = load_settings_file(path)
        assert VerifierConfig(**settings) == VerifierConfig()


class TestConfigLoader:
    """Test configuration precedence."""

    def test_defaults_without_sources(self):
        """Test loading with no file, environment or overrides."""
        assert load_config() == VerifierConfig()

    def test_file_from_working_directory(self):
        """Test that the settings file is found in the current directory."""
        Path(SETTINGS_FILENAME).write_text("trials=5\n")
        assert ConfigLoader().load().trials == 5

    def test_precedence(self, tmp_path, monkeypatch):
        """Test overrides > environment > file > defaults."""
        path = tmp_path / "custom.settings"
        path.write_text("seed=1\ntrials=2\nworkers=3\n")
        monkeypatch.setenv("LORENTZ_VERIFIER_TRIALS", "20")
        monkeypatch.setenv("LORENTZ_VERIFIER_WORKERS", "30")

        config = load_config(path, workers=4, seed=None)

        assert config.seed == 1
        assert config.trials == 20
        assert config.workers == 4
        assert config.points_per_instance == 10

    def test_unknown_keys_dropped(self, tmp_path):
        """Test that unknown settings are ignored rather than rejected."""
        path = tmp_path / "custom.settings"
        path.write_text("colour=blue\nseed=9\n")
        config = load_config(path)
        assert config.seed == 9
        assert not hasattr(config, "colour")

    def test_invalid_merged_value(self, tmp_path):
        """Test that invalid values from any source fail validation."""
        path = tmp_path / "custom.settings"
        path.write_text("workers=100\n")
        with pytest.raises(ValidationError):
            load_config(path)
