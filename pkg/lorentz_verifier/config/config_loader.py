"""Configuration loading: defaults, settings file, environment, overrides."""

from pathlib import Path
from typing import Any, Dict, Optional

from ..verifier_logging import get_logger
from .models import VerifierConfig
from .settings import SETTINGS_FILENAME, load_settings_file

logger = get_logger()


class ConfigLoader:
    """Merges configuration sources into a validated VerifierConfig."""

    def __init__(self, settings_file: Optional[Path] = None):
        self.settings_file = (Path(settings_file) if settings_file
                              else Path.cwd() / SETTINGS_FILENAME)

    def load(self, **overrides) -> VerifierConfig:
        """Load configuration from all sources.

        Precedence (highest to lowest):
        1. Explicit overrides (None values are ignored)
        2. Environment variables
        3. Settings file
        4. Defaults

        Raises pydantic.ValidationError when the merged values are invalid.
        """
        config_dict: Dict[str, Any] = {}

        file_settings = load_settings_file(self.settings_file)
        if file_settings:
            config_dict.update(file_settings)
            logger.debug(f"Loaded {len(file_settings)} settings from {self.settings_file}")

        env_settings = VerifierConfig.env_overrides()
        if env_settings:
            config_dict.update(env_settings)
            logger.debug(f"Applied {len(env_settings)} environment variables")

        explicit = {k: v for k, v in overrides.items() if v is not None}
        config_dict.update(explicit)
        if explicit:
            logger.debug(f"Applied {len(explicit)} explicit overrides")

        unknown = sorted(set(config_dict) - set(VerifierConfig.model_fields))
        if unknown:
            logger.warning(f"Ignoring unknown settings: {', '.join(unknown)}")
            for key in unknown:
                del config_dict[key]

        return VerifierConfig(**config_dict)


def load_config(settings_file: Optional[Path] = None, **overrides) -> VerifierConfig:
    """Load configuration with precedence overrides > env > settings file > defaults."""
    return ConfigLoader(settings_file).load(**overrides)
