"""Convex-body forms of the rKT, Rayleigh and Pluennecke-Ruzsa inequalities."""

from fractions import Fraction
from math import comb
from typing import Any, Optional, Sequence

from ..errors import VerifierInputError
from ..lorentz.verdict import Verdict
from .mixed import MinkowskiCombiner
from .polytope import Polytope, bipyramid, minkowski_sum, project


def rkt_convex_check(b: Polytope, bodies: Sequence[Polytope], k: int,
                     combiner: Optional[MinkowskiCombiner] = None) -> Verdict:
    """vol(B) V(B[n-m], A_1..A_m) <= binom(m, k) V(B[n-k], A_1..A_k) V(B[n-m+k], A_k+1..A_m)."""
    n = b.ambient_dim
    m = len(bodies)
    if not 0 <= k <= m <= n:
        raise VerifierInputError(f"need 0 <= k <= m <= n, got k={k}, m={m}, n={n}", "k")
    combiner = combiner or MinkowskiCombiner([b, *bodies])
    if combiner.bodies[0] != b or len(combiner.bodies) != m + 1:
        raise VerifierInputError("combiner must be built over [B, A_1, ..., A_m]", "combiner")

    def mv(head: int, chosen: range) -> Fraction:
        multiplicities = [head] + [1 if i in chosen else 0 for i in range(m)]
        return combiner.mixed_volume(multiplicities)

    vol_b = combiner.volume([1] + [0] * m)
    all_slots = mv(n - m, range(m))
    first = mv(n - k, range(k))
    second = mv(n - m + k, range(k, m))
    lhs = vol_b * all_slots
    rhs = comb(m, k) * first * second
    margin = rhs - lhs
    if margin < 0:
        return Verdict.failed({"k": k, "m": m, "lhs": lhs, "rhs": rhs}, margin=margin)
    return Verdict.passed(margin=margin, lhs=lhs, rhs=rhs)


def projection_volumes(b: Polytope) -> dict[str, Fraction]:
    """vol(B) and the volumes of its projections along e_1, e_2 and both."""
    if b.ambient_dim < 3:
        raise VerifierInputError("need ambient dimension at least 3", "dim")
    return {
        "vol_B": b.volume,
        "vol_p1B": project(b, [0]).volume,
        "vol_p2B": project(b, [1]).volume,
        "vol_p12B": project(b, [0, 1]).volume,
    }


def giannopoulos_check(b: Polytope) -> Verdict:
    """vol(B) vol(p12 B) <= 2(1 - 1/n) vol(p1 B) vol(p2 B)."""
    volumes = projection_volumes(b)
    n = b.ambient_dim
    lhs = volumes["vol_B"] * volumes["vol_p12B"]
    rhs = 2 * (1 - Fraction(1, n)) * volumes["vol_p1B"] * volumes["vol_p2B"]
    margin = rhs - lhs
    if margin < 0:
        return Verdict.failed({**volumes, "lhs": lhs, "rhs": rhs}, margin=margin)
    return Verdict.passed(margin=margin, **volumes)


def one_rayleigh_counterexample_report() -> dict[str, Any]:
    """The bipyramid over [-1, 1]^2 breaks the c = 1 projection inequality
    and meets the 2(1 - 1/n) bound with equality."""
    b = bipyramid()
    volumes = projection_volumes(b)
    lhs = volumes["vol_B"] * volumes["vol_p12B"]
    rhs_one = volumes["vol_p1B"] * volumes["vol_p2B"]
    rhs_sharp = 2 * (1 - Fraction(1, 3)) * rhs_one
    one_rayleigh = (Verdict.passed(margin=rhs_one - lhs) if lhs <= rhs_one
                    else Verdict.failed({"lhs": lhs, "rhs": rhs_one}, margin=rhs_one - lhs))
    sharp = giannopoulos_check(b)
    return {
        "body": b,
        **volumes,
        "lhs": lhs,
        "rhs_one_rayleigh": rhs_one,
        "rhs_sharp": rhs_sharp,
        "one_rayleigh": one_rayleigh,
        "sharp_bound": sharp,
        "sharp_equality": lhs == rhs_sharp,
    }


def quermass_polytopal_check(b: Polytope, u: Polytope, e_coords: Sequence[int],
                             k: int, m: int) -> Verdict:
    """rkt_convex_check with A_1..A_k = U and A_k+1..A_m = U projected onto the
    complement of the coordinate subspace spanned by ``e_coords`` (0-based)."""
    n = b.ambient_dim
    if u.ambient_dim != n:
        raise VerifierInputError("structuring body has the wrong dimension", "U")
    coords = set(e_coords)
    if any(i < 0 or i >= n for i in coords):
        raise VerifierInputError("subspace coordinate out of range", "E")
    if len(coords) != n - m + k:
        raise VerifierInputError(
            f"dim E = {len(coords)} but n - m + k = {n - m + k}", "E")
    flattened = Polytope(n, tuple(tuple(Fraction(0) if i in coords else c
                                        for i, c in enumerate(v)) for v in u.vertices))
    bodies = [u] * k + [flattened] * (m - k)
    return rkt_convex_check(b, bodies, k)


def pr_convex_ratio(a: Polytope, b: Polytope, c: Polytope) -> Optional[Fraction]:
    """vol(A) vol(A+B+C) / (vol(A+B) vol(A+C)); None when the denominator vanishes."""
    ab = minkowski_sum(a, b)
    ac = minkowski_sum(a, c)
    denominator = ab.volume * ac.volume
    if denominator == 0:
        return None
    return a.volume * minkowski_sum(ab, c).volume / denominator
