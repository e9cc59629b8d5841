"""Signature of a symmetric rational matrix by exact congruence elimination."""

from dataclasses import dataclass
from fractions import Fraction
from typing import Sequence, Union

from ..polycore.symmatrix import SymMatrix


@dataclass(frozen=True)
class Inertia:
    positive: int
    zero: int
    negative: int

    def as_tuple(self) -> tuple[int, int, int]:
        return (self.positive, self.zero, self.negative)

    def to_json(self) -> dict[str, int]:
        return {"positive": self.positive, "zero": self.zero, "negative": self.negative}


def inertia(matrix: Union[SymMatrix, Sequence[Sequence[Fraction]]]) -> Inertia:
    """Count positive, zero and negative eigenvalues without computing any.

    Repeatedly pivots on a nonzero diagonal entry and takes the Schur
    complement. When the remaining diagonal is all zero but an off-diagonal
    entry a_ij is not, adding row/column j to row/column i makes the
    diagonal entry 2*a_ij nonzero.
    """
    rows = matrix.rows() if isinstance(matrix, SymMatrix) else [
        [Fraction(x) for x in row] for row in matrix]
    positive = negative = zero = 0

    while rows:
        size = len(rows)
        pivot = next((i for i in range(size) if rows[i][i] != 0), None)
        if pivot is None:
            pair = next(((i, j) for i in range(size) for j in range(i + 1, size)
                         if rows[i][j] != 0), None)
            if pair is None:
                zero += size
                break
            i, j = pair
            for k in range(size):
                rows[i][k] += rows[j][k]
            for k in range(size):
                rows[k][i] += rows[k][j]
            pivot = i

        p = rows[pivot][pivot]
        if p > 0:
            positive += 1
        else:
            negative += 1
        keep = [k for k in range(size) if k != pivot]
        rows = [[rows[r][c] - rows[r][pivot] * rows[pivot][c] / p for c in keep] for r in keep]

    return Inertia(positive, zero, negative)
