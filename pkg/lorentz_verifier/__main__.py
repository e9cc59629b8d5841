"""
Main entry point for lorentz_verifier package.
Allows running the verifier as: python -m lorentz_verifier
"""

from lorentz_verifier.cli_full import cli

if __name__ == "__main__":
    cli()
