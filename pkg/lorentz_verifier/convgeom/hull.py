"""Exact convex hulls.

Qhull proposes a triangulated boundary in floating point. The proposal is
then certified with integer arithmetic after clearing denominators: every
facet hyperplane must have all input points on one side, and every ridge
must be shared by exactly two facets. Extreme points are the hull vertices
whose tight facet normals span the space. Nothing that reaches a caller
depends on floating point.
"""

from collections import Counter
from dataclasses import dataclass
from fractions import Fraction
from math import factorial, gcd
from typing import Optional, Sequence

import numpy as np
from scipy.spatial import ConvexHull, QhullError

from ..errors import HullCertificateError, VerifierInputError
from ..polycore.rational import common_denominator, integer_rank, pivot_columns
from ..verifier_logging import get_logger

logger = get_logger()

Point = tuple[Fraction, ...]
IntPoint = tuple[int, ...]

_INT64_SAFE = 2 ** 62
_CHUNK = 2048


@dataclass(frozen=True)
class HullResult:
    """Affine dimension, sorted extreme points and volume (0 unless full-dimensional)."""

    dim: int
    vertices: tuple[Point, ...]
    volume: Fraction


def batched_det(stack: np.ndarray) -> np.ndarray:
    """Exact determinants of a stack of small integer matrices by cofactor expansion.

    Works on int64 arrays (caller guarantees no overflow) and on object arrays
    holding Python integers.
    """
    k = stack.shape[-1]
    if k == 1:
        return stack[..., 0, 0]
    if k == 2:
        return stack[..., 0, 0] * stack[..., 1, 1] - stack[..., 0, 1] * stack[..., 1, 0]
    total = None
    for j in range(k):
        minor = np.delete(stack[..., 1:, :], j, axis=-1)
        term = stack[..., 0, j] * batched_det(minor)
        if total is None:
            total = term
        elif j % 2:
            total = total - term
        else:
            total = total + term
    return total


def _array(rows, bound: int) -> np.ndarray:
    if bound < _INT64_SAFE:
        return np.array(rows, dtype=np.int64)
    array = np.empty((len(rows), len(rows[0])), dtype=object)
    for i, row in enumerate(rows):
        for j, value in enumerate(row):
            array[i, j] = int(value)
    return array


def _as_integers(points: Sequence[Point]) -> tuple[list[IntPoint], int]:
    den = common_denominator(c for p in points for c in p)
    return [tuple(int(c * den) for c in p) for p in points], den


def affine_frame(coords: Sequence[Sequence[Fraction]]) -> tuple[int, tuple[int, ...]]:
    """Affine dimension of a point set and coordinates on which projection is injective."""
    base = coords[0]
    diffs = [[Fraction(c) - Fraction(b) for c, b in zip(p, base)] for p in coords[1:]]
    if not diffs:
        return 0, ()
    columns = pivot_columns(diffs)
    return len(columns), columns


def _primitive(normal: Sequence[int]) -> IntPoint:
    g = 0
    for a in normal:
        g = gcd(g, int(a))
    return tuple(int(a) // g for a in normal) if g else tuple(0 for _ in normal)


def _certify(coords: Sequence[IntPoint], simplices: np.ndarray,
             with_volume: bool) -> tuple[list[int], int]:
    """Check a proposed triangulated boundary; return extreme point indices and d!*volume."""
    d = len(coords[0])
    count = len(coords)
    magnitude = max(1, max(abs(c) for p in coords for c in p))
    normal_bound = factorial(d - 1) * (2 * magnitude) ** (d - 1)
    pts = _array(coords, 4 * d * normal_bound * magnitude)
    simplices = np.asarray(simplices, dtype=np.intp)

    ridges: Counter = Counter()
    for simplex in simplices.tolist():
        ordered = sorted(simplex)
        for skip in range(d):
            ridges[tuple(ordered[:skip] + ordered[skip + 1:])] += 1
    if any(times != 2 for times in ridges.values()):
        raise HullCertificateError("proposed boundary is not closed")

    base = pts[simplices[:, 0]]
    diffs = pts[simplices[:, 1:]] - base[:, None, :]
    normals = np.stack(
        [batched_det(np.delete(diffs, c, axis=2)) * (1 if c % 2 == 0 else -1) for c in range(d)],
        axis=1)
    offsets = (normals * base).sum(axis=1)
    nonzero = np.asarray(np.any(normals != 0, axis=1), dtype=bool)
    if not nonzero.any():
        raise HullCertificateError("every proposed facet is degenerate")

    # the centroid of all points is interior, so it fixes outward orientation
    centroid_sum = [sum(p[k] for p in coords) for k in range(d)]
    signs = []
    for f in range(len(simplices)):
        side = sum(int(normals[f, k]) * centroid_sum[k] for k in range(d)) - count * int(offsets[f])
        if nonzero[f] and side == 0:
            raise HullCertificateError("centroid lies on a proposed facet")
        signs.append(-1 if side > 0 else 1)
    signs_array = np.array(signs, dtype=normals.dtype)
    normals = normals * signs_array[:, None]
    offsets = offsets * signs_array

    for start in range(0, count, _CHUNK):
        block = pts[start:start + _CHUNK]
        excess = block @ normals.T - offsets[None, :]
        if np.asarray(excess > 0, dtype=bool).any():
            raise HullCertificateError("a point lies outside a proposed facet")

    candidates = sorted(set(int(i) for i in np.unique(simplices)))
    tight = np.asarray((pts[candidates] @ normals.T - offsets[None, :]) == 0, dtype=bool)
    tight &= nonzero[None, :]
    extreme = []
    for row, index in enumerate(candidates):
        planes = {_primitive(normals[f].tolist()) for f in np.flatnonzero(tight[row])}
        if len(planes) >= d and integer_rank([list(p) for p in planes]) == d:
            extreme.append(index)

    scaled_volume = 0
    if with_volume:
        apex = pts[extreme[0]]
        cones = pts[simplices] - apex[None, None, :]
        if factorial(d) * (2 * magnitude) ** d >= _INT64_SAFE:
            cones = cones.astype(object)
        scaled_volume = sum(abs(int(v)) for v in batched_det(cones))
    return extreme, scaled_volume


def _qhull_simplices(coords: Sequence[IntPoint], joggle: bool = False) -> Optional[np.ndarray]:
    try:
        hull = ConvexHull(np.array(coords, dtype=float), qhull_options="QJ" if joggle else None)
    except QhullError:
        return None
    return hull.simplices


def _full_dimensional(coords: Sequence[IntPoint], with_volume: bool,
                      known_full: bool = False) -> Optional[tuple[list[int], int]]:
    """Certified hull of a set assumed full-dimensional.

    Without ``known_full`` a rejected proposal returns None so the caller can
    fall back to the exact affine frame; with it, a joggled retry is made
    before giving up.
    """
    attempts = (False, True) if known_full else (False,)
    failure = "Qhull could not produce a boundary"
    for joggle in attempts:
        if joggle:
            logger.debug("retrying Qhull with joggled input")
        simplices = _qhull_simplices(coords, joggle=joggle)
        if simplices is None:
            continue
        try:
            return _certify(coords, simplices, with_volume)
        except HullCertificateError as e:
            failure = str(e)
    if known_full:
        raise HullCertificateError(failure)
    return None


def exact_hull(points: Sequence[Sequence[Fraction]]) -> HullResult:
    """Extreme points, affine dimension and exact volume of conv(points)."""
    unique = sorted(set(tuple(Fraction(c) for c in p) for p in points))
    if not unique:
        raise VerifierInputError("empty point set", "vertices")
    n = len(unique[0])
    if any(len(p) != n for p in unique):
        raise VerifierInputError("points have different dimensions", "vertices")
    if len(unique) == 1:
        return HullResult(0, (unique[0],), Fraction(0))

    coords, den = _as_integers(unique)
    if n >= 2 and len(unique) > n:
        full = _full_dimensional(coords, with_volume=True)
        if full is not None:
            extreme, scaled_volume = full
            logger.debug(f"hull in R^{n}: {len(unique)} points, {len(extreme)} vertices")
            return HullResult(n, tuple(unique[i] for i in extreme),
                              Fraction(scaled_volume, factorial(n) * den ** n))

    dim, columns = affine_frame(unique)
    if dim == n and n >= 2:
        extreme, scaled_volume = _full_dimensional(coords, with_volume=True, known_full=True)
        return HullResult(n, tuple(unique[i] for i in extreme),
                          Fraction(scaled_volume, factorial(n) * den ** n))

    projected = [tuple(c[j] for j in columns) for c in coords]
    if dim == 1:
        low = min(range(len(projected)), key=lambda i: projected[i][0])
        high = max(range(len(projected)), key=lambda i: projected[i][0])
        extreme = sorted({low, high})
        volume = Fraction(projected[high][0] - projected[low][0], den) if n == 1 else Fraction(0)
        return HullResult(1, tuple(unique[i] for i in extreme), volume)

    extreme, _ = _full_dimensional(projected, with_volume=False, known_full=True)
    return HullResult(dim, tuple(unique[i] for i in sorted(extreme)), Fraction(0))


def affine_dimension(points: Sequence[Sequence[Fraction]]) -> int:
    unique = sorted(set(tuple(Fraction(c) for c in p) for p in points))
    if not unique:
        raise VerifierInputError("empty point set", "vertices")
    return affine_frame(unique)[0]
