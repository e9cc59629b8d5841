"""Exact symmetric rational matrices."""

from dataclasses import dataclass
from fractions import Fraction
from typing import Sequence

from ..errors import VerifierInputError
from .rational import exact_det, parse_rat

Rows = tuple[tuple[Fraction, ...], ...]


@dataclass(frozen=True)
class SymMatrix:
    entries: Rows

    def __post_init__(self):
        rows = tuple(tuple(parse_rat(x, "matrix") for x in row) for row in self.entries)
        n = len(rows)
        if any(len(row) != n for row in rows):
            raise VerifierInputError("matrix is not square", "matrix")
        for i in range(n):
            for j in range(i + 1, n):
                if rows[i][j] != rows[j][i]:
                    raise VerifierInputError(
                        f"matrix is not symmetric at ({i + 1}, {j + 1})", "matrix")
        object.__setattr__(self, "entries", rows)

    @classmethod
    def from_rows(cls, rows: Sequence[Sequence[object]]) -> "SymMatrix":
        return cls(tuple(tuple(row) for row in rows))

    @classmethod
    def zero(cls, n: int) -> "SymMatrix":
        return cls(tuple((Fraction(0),) * n for _ in range(n)))

    @classmethod
    def identity(cls, n: int) -> "SymMatrix":
        return cls.diagonal([1] * n)

    @classmethod
    def diagonal(cls, values: Sequence[object]) -> "SymMatrix":
        n = len(values)
        return cls(tuple(tuple(parse_rat(values[i]) if i == j else Fraction(0) for j in range(n))
                         for i in range(n)))

    @classmethod
    def elementary(cls, n: int, i: int, j: int) -> "SymMatrix":
        """E_ii when i == j, otherwise E_ij + E_ji."""
        return cls(tuple(tuple(Fraction(1) if {r, c} == {i, j} else Fraction(0) for c in range(n))
                         for r in range(n)))

    @property
    def dim(self) -> int:
        return len(self.entries)

    def rows(self) -> list[list[Fraction]]:
        return [list(row) for row in self.entries]

    def __add__(self, other: "SymMatrix") -> "SymMatrix":
        if not isinstance(other, SymMatrix):
            return NotImplemented
        if self.dim != other.dim:
            raise VerifierInputError("matrix size mismatch", "matrix")
        return SymMatrix(tuple(tuple(a + b for a, b in zip(r1, r2))
                               for r1, r2 in zip(self.entries, other.entries)))

    def scale(self, factor: object) -> "SymMatrix":
        factor = parse_rat(factor)
        return SymMatrix(tuple(tuple(x * factor for x in row) for row in self.entries))

    def det(self) -> Fraction:
        return exact_det(self.entries)

    def is_positive_definite(self) -> bool:
        """Sylvester's criterion on leading principal minors."""
        for k in range(1, self.dim + 1):
            minor = [row[:k] for row in self.entries[:k]]
            if exact_det(minor) <= 0:
                return False
        return True
