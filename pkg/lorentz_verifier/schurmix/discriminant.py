"""Mixed discriminants and the quadratic forms they induce on symmetric matrices."""

from fractions import Fraction
from itertools import product
from math import comb, factorial, prod
from typing import Sequence

from ..errors import PreconditionError, VerifierInputError
from ..lorentz.verdict import Verdict
from ..polycore.multiindex import compositions, multinomial
from ..polycore.polynomial import HomPoly
from ..polycore.rational import exact_det
from ..polycore.symmatrix import SymMatrix
from ..verifier_logging import get_logger
from .partitions import Partition
from .schur import schur

logger = get_logger()


def _merge(matrices: Sequence[SymMatrix],
           multiplicities: Sequence[int]) -> tuple[list[SymMatrix], list[int]]:
    distinct: list[SymMatrix] = []
    counts: list[int] = []
    for matrix, count in zip(matrices, multiplicities):
        if count == 0:
            continue
        if matrix in distinct:
            counts[distinct.index(matrix)] += count
        else:
            distinct.append(matrix)
            counts.append(count)
    return distinct, counts


def mixed_discriminant_with(matrices: Sequence[SymMatrix],
                            multiplicities: Sequence[int]) -> Fraction:
    """D(M_1[a_1], ..., M_r[a_r]) by polarization over the multiplicity box.

    Normalized so that D(M, ..., M) = det M.
    """
    if not matrices or len(matrices) != len(multiplicities):
        raise VerifierInputError("matrices and multiplicities must match", "multiplicities")
    n = matrices[0].dim
    if any(m.dim != n for m in matrices):
        raise VerifierInputError("matrices have different sizes", "matrices")
    if any(a < 0 for a in multiplicities) or sum(multiplicities) != n:
        raise VerifierInputError(
            f"multiplicities must be nonnegative and sum to {n}", "multiplicities")
    distinct, counts = _merge(matrices, multiplicities)
    rows = [m.entries for m in distinct]
    total = Fraction(0)
    for c in product(*(range(a + 1) for a in counts)):
        size = sum(c)
        if size == 0:
            continue
        combined = [[sum((k * r[i][j] for k, r in zip(c, rows) if k), Fraction(0))
                     for j in range(n)] for i in range(n)]
        weight = prod(comb(a, k) for a, k in zip(counts, c))
        sign = -1 if (n - size) % 2 else 1
        total += sign * weight * exact_det(combined)
    return total / factorial(n)


def mixed_discriminant(matrices: Sequence[SymMatrix]) -> Fraction:
    """D(M_1, ..., M_n) for n symmetric n x n matrices."""
    if not matrices:
        raise VerifierInputError("need at least one matrix", "matrices")
    n = matrices[0].dim
    if len(matrices) != n:
        raise VerifierInputError(f"expected {n} matrices, got {len(matrices)}", "matrices")
    return mixed_discriminant_with(matrices, [1] * n)


def _require_positive_definite(matrices: Sequence[SymMatrix], n: int, field: str) -> None:
    for index, matrix in enumerate(matrices):
        if matrix.dim != n:
            raise VerifierInputError(f"{field}[{index + 1}] is not {n}x{n}", field)
        if not matrix.is_positive_definite():
            raise PreconditionError(f"{field}[{index + 1}] is not positive definite", field)


def symmetric_basis(n: int) -> list[SymMatrix]:
    """E_11, ..., E_nn followed by E_ij + E_ji for i < j in row order."""
    basis = [SymMatrix.elementary(n, i, i) for i in range(n)]
    basis += [SymMatrix.elementary(n, i, j) for i in range(n) for j in range(i + 1, n)]
    return basis


def _gram(n: int, fixed: list[tuple[Fraction, list[SymMatrix], list[int]]]) -> SymMatrix:
    """Gram matrix of q(M, N) = sum of c * D(M, N, fixed matrices with multiplicity)."""
    basis = symmetric_basis(n)
    size = len(basis)
    gram = [[Fraction(0)] * size for _ in range(size)]
    for a in range(size):
        for b in range(a, size):
            value = Fraction(0)
            for coef, matrices, counts in fixed:
                value += coef * mixed_discriminant_with(
                    [basis[a], basis[b], *matrices], [1, 1, *counts])
            gram[a][b] = gram[b][a] = value
    logger.debug(f"Gram matrix on Sym_{n}: {size}x{size}, {len(fixed)} fixed terms")
    return SymMatrix.from_rows(gram)


def md_hodge_form(hypothesis: Sequence[SymMatrix], w: SymMatrix, m: int) -> SymMatrix:
    """Gram matrix of q(M, N) = D(M, N, A_1, ..., A_{m-2}, W[n - m]) on Sym_n.

    The basis is ``symmetric_basis(n)``; the A_i and W must be positive definite.
    """
    n = w.dim
    if not 2 <= m <= n:
        raise VerifierInputError(f"need 2 <= m <= n, got m={m}, n={n}", "m")
    if len(hypothesis) != m - 2:
        raise VerifierInputError(f"expected {m - 2} hypothesis matrices", "A")
    _require_positive_definite(hypothesis, n, "A")
    _require_positive_definite([w], n, "W")
    matrices = [*hypothesis, w]
    return _gram(n, [(Fraction(1), matrices, [1] * len(hypothesis) + [n - m])])


def discriminant_polynomial(matrices: Sequence[SymMatrix], w: SymMatrix, m: int) -> HomPoly:
    """f(x) = D((x_1 A_1 + ... + x_k A_k)[m], W[n - m])."""
    n = w.dim
    if not matrices:
        raise VerifierInputError("need at least one matrix", "A")
    if not 1 <= m <= n:
        raise VerifierInputError(f"need 1 <= m <= n, got m={m}, n={n}", "m")
    _require_positive_definite(matrices, n, "A")
    _require_positive_definite([w], n, "W")
    k = len(matrices)
    terms = {}
    for a in compositions(k, m):
        terms[a] = multinomial(a) * mixed_discriminant_with([*matrices, w], [*a, n - m])
    return HomPoly(k, m, terms)


def schur_md_form(lam: Partition, omegas: Sequence[SymMatrix],
                  hypothesis: Sequence[SymMatrix], n: int) -> SymMatrix:
    """Gram matrix of q(M, N) = D(M, N, A_1, ..., A_k, s_lam(Omega_1, ..., Omega_e)).

    s_lam is expanded into monomials, each monomial x^a standing for the
    matrices Omega_i repeated a_i times.
    """
    if len(omegas) != lam.e:
        raise VerifierInputError(f"expected e = {lam.e} matrices, got {len(omegas)}", "Omega")
    if lam.size + len(hypothesis) != n - 2:
        raise VerifierInputError(
            f"|lambda| + k = {lam.size + len(hypothesis)}, expected n - 2 = {n - 2}", "lambda")
    _require_positive_definite(omegas, n, "Omega")
    _require_positive_definite(hypothesis, n, "A")
    fixed = []
    for exp, coef in schur(lam).sorted_terms():
        fixed.append((coef, [*hypothesis, *omegas], [1] * len(hypothesis) + list(exp)))
    return _gram(n, fixed)


def md_af_check(a: SymMatrix, b: SymMatrix, hypothesis: Sequence[SymMatrix]) -> Verdict:
    """D(A, A, H...) D(B, B, H...) <= D(A, B, H...)^2 for positive definite A and H."""
    n = a.dim
    if b.dim != n:
        raise VerifierInputError("A and B have different sizes", "B")
    if len(hypothesis) != n - 2:
        raise VerifierInputError(f"expected {n - 2} hypothesis matrices", "A")
    _require_positive_definite([a], n, "A")
    _require_positive_definite(hypothesis, n, "hypothesis")
    rest = [1] * len(hypothesis)
    mixed = mixed_discriminant_with([a, b, *hypothesis], [1, 1, *rest])
    first = mixed_discriminant_with([a, *hypothesis], [2, *rest])
    second = mixed_discriminant_with([b, *hypothesis], [2, *rest])
    margin = mixed ** 2 - first * second
    details = {"D_AB": mixed, "D_AA": first, "D_BB": second}
    if margin < 0:
        logger.warning(f"mixed discriminant AF violation: {details}")
        return Verdict.failed(details, margin=margin)
    return Verdict.passed(margin=margin, **details)
