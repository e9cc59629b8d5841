"""Configuration model for verifier runs."""

import os
from typing import Any, Dict, Optional

from pydantic import BaseModel, Field, field_validator

from ..verifier_logging import get_logger

logger = get_logger()

ENV_PREFIX = "LORENTZ_VERIFIER_"
LOG_LEVELS = ("DEBUG", "INFO", "WARNING", "ERROR", "CRITICAL")


class VerifierConfig(BaseModel):
    """Global configuration model with validation."""

    # Fuzzing
    seed: int = Field(default=0, ge=0, lt=2**64)
    trials: int = Field(default=100, ge=1)
    points_per_instance: int = Field(default=10, ge=1)
    max_dim: int = Field(default=4, ge=2, le=6)
    max_vertices: int = Field(default=12, ge=3)

    # Parallelism
    workers: int = Field(default=1, ge=1, le=64)

    # Sweep budgets
    max_splittings: int = Field(default=10_000, ge=1)
    sample_splittings: int = Field(default=1_000, ge=1)
    max_ground_set: int = Field(default=12, ge=1, le=12)
    budget_ms: Optional[int] = Field(default=None, ge=1)

    # Output
    emit_csv: bool = Field(default=False)
    log_level: str = Field(default="INFO")

    @field_validator("log_level")
    @classmethod
    def validate_log_level(cls, v: str) -> str:
        level = v.strip().upper()
        if level not in LOG_LEVELS:
            raise ValueError(f"log_level must be one of {', '.join(LOG_LEVELS)}")
        return level

    @classmethod
    def env_overrides(cls) -> Dict[str, Any]:
        """Raw ``LORENTZ_VERIFIER_<FIELD>`` values; pydantic coerces them."""
        overrides = {}
        for name in cls.model_fields:
            value = os.environ.get(ENV_PREFIX + name.upper())
            if value is not None and value != "":
                overrides[name] = value
        return overrides

    @classmethod
    def from_env(cls) -> "VerifierConfig":
        """Create config with environment variable overrides."""
        return cls(**cls.env_overrides())
