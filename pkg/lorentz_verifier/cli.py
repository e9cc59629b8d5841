"""CLI entry point with graceful dependency handling."""

import sys

from .verifier_logging import get_logger

logger = get_logger()


def cli():
    """Exact verifier for Lorentzian polynomials and mixed-volume inequalities."""
    try:
        import click  # noqa: F401
        from . import cli_full
    except ImportError as e:
        logger.error(f"Missing dependencies for CLI functionality: {e}")
        logger.error("   Install with: pip install -e .")
        sys.exit(2)
    return cli_full.cli()


# For direct module execution
if __name__ == '__main__':
    cli()

__all__ = ['cli']
