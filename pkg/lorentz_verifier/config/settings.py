"""key=value settings file parsing."""

from pathlib import Path
from typing import Any, Dict

from ..verifier_logging import get_logger

logger = get_logger()

SETTINGS_FILENAME = "lorentz-verifier.settings"

# Upper-case spellings accepted in settings files
KEY_MAPPING = {
    "SEED": "seed",
    "TRIALS": "trials",
    "POINTS_PER_INSTANCE": "points_per_instance",
    "MAX_DIM": "max_dim",
    "MAX_VERTICES": "max_vertices",
    "WORKERS": "workers",
    "MAX_SPLITTINGS": "max_splittings",
    "SAMPLE_SPLITTINGS": "sample_splittings",
    "MAX_GROUND_SET": "max_ground_set",
    "BUDGET_MS": "budget_ms",
    "EMIT_CSV": "emit_csv",
    "LOG_LEVEL": "log_level",
}


def _coerce(value: str) -> Any:
    if value.lower() in ("true", "false"):
        return value.lower() == "true"
    if value.replace(".", "", 1).replace("-", "", 1).isdigit():
        try:
            return float(value) if "." in value else int(value)
        except ValueError:
            pass
    return value


def load_settings_file(settings_file: Path) -> Dict[str, Any]:
    """Read ``key=value`` lines; ``#`` starts a comment, values are coerced.

    A missing file yields no settings; an unreadable one is logged and skipped.
    """
    settings: Dict[str, Any] = {}
    if not settings_file.exists():
        return settings

    try:
        with open(settings_file, "r") as f:
            for line in f:
                line = line.split("#", 1)[0].strip()
                if not line or "=" not in line:
                    continue
                key, value = line.split("=", 1)
                key = key.strip()
                if not key:
                    continue
                settings[KEY_MAPPING.get(key, key)] = _coerce(value.strip())
    except OSError as e:
        logger.warning(f"Failed to load {settings_file}: {e}")

    return settings


def create_default_settings_file(path: Path) -> None:
    """Write a commented settings template."""
    template = """# lorentz-verifier settings
# Lines starting with # are comments; environment variables
# LORENTZ_VERIFIER_<KEY> and command-line flags take precedence.

seed=0
trials=100
points_per_instance=10
workers=1

# Largest polytope dimension and vertex count in generated instances
max_dim=4
max_vertices=12

# Splittings checked exhaustively before falling back to sampling
max_splittings=10000
sample_splittings=1000

# Largest ground set for exhaustive polymatroid checks
max_ground_set=12

emit_csv=false
log_level=INFO
"""
    with open(path, "w") as f:
        f.write(template)
    logger.info(f"Created default settings file: {path}")
