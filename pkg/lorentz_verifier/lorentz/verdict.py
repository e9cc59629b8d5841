"""Outcome of a single check or of a sweep of checks."""

from dataclasses import dataclass, field
from fractions import Fraction
from typing import Any, Dict, Optional

from ..polycore.codec import jsonable


@dataclass(frozen=True)
class Verdict:
    """Result object for membership and inequality checks.

    ``margin`` is RHS - LHS of the inequality written as ``LHS <= RHS``;
    for a sweep it is the smallest margin seen. ``witness`` is set exactly
    when the check fails.
    """

    holds: bool
    witness: Optional[Dict[str, Any]] = None
    margin: Optional[Fraction] = None
    checked: int = 0
    details: Dict[str, Any] = field(default_factory=dict)

    @classmethod
    def passed(cls, margin: Optional[Fraction] = None, checked: int = 1,
               **details: Any) -> "Verdict":
        return cls(holds=True, margin=margin, checked=checked, details=details)

    @classmethod
    def failed(cls, witness: Dict[str, Any], margin: Optional[Fraction] = None,
               checked: int = 1, **details: Any) -> "Verdict":
        return cls(holds=False, witness=witness, margin=margin, checked=checked, details=details)

    def combine_with(self, other: "Verdict") -> "Verdict":
        """First failure wins; checked counts add up and the margin is the minimum."""
        checked = self.checked + other.checked
        if not self.holds:
            return Verdict(False, self.witness, self.margin, checked, self.details)
        if not other.holds:
            return Verdict(False, other.witness, other.margin, checked, other.details)
        margins = [m for m in (self.margin, other.margin) if m is not None]
        details = {**self.details, **other.details}
        return Verdict(True, None, min(margins) if margins else None, checked, details)

    def to_json(self) -> Dict[str, Any]:
        data: Dict[str, Any] = {
            "holds": self.holds,
            "checked": self.checked,
            "margin": jsonable(self.margin),
            "witness": jsonable(self.witness),
        }
        if self.details:
            data["details"] = jsonable(self.details)
        return data


def sweep(verdicts) -> Verdict:
    """Fold an iterable of verdicts, stopping at the first failure."""
    total: Optional[Verdict] = None
    for verdict in verdicts:
        total = verdict if total is None else total.combine_with(verdict)
        if not total.holds:
            break
    return total if total is not None else Verdict.passed(checked=0)
