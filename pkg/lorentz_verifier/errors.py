"""Error types raised by the verifier.

Input problems subclass ``ValueError`` and algorithmic failures subclass
``RuntimeError`` so callers can keep catching the built-in families.
"""

from typing import Optional


class VerifierInputError(ValueError):
    """Malformed or out-of-range input. Maps to CLI exit code 2."""

    def __init__(self, message: str, field: Optional[str] = None):
        super().__init__(message)
        self.field = field

    def __str__(self) -> str:
        message = super().__str__()
        if self.field:
            return f"{self.field}: {message}"
        return message


class PreconditionError(VerifierInputError):
    """A mathematical hypothesis of an operation does not hold for the input."""


class BudgetError(RuntimeError):
    """An exhaustive check would exceed its configured enumeration budget."""


class HullCertificateError(RuntimeError):
    """Floating-point hull output could not be certified in exact arithmetic."""
