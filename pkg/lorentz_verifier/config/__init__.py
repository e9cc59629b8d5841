"""Configuration package."""

from .config_loader import ConfigLoader, load_config
from .models import VerifierConfig
from .settings import SETTINGS_FILENAME, create_default_settings_file, load_settings_file

__all__ = [
    "ConfigLoader",
    "SETTINGS_FILENAME",
    "VerifierConfig",
    "create_default_settings_file",
    "load_config",
    "load_settings_file",
]
