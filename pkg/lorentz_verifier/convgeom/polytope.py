"""Convex polytopes in V-representation with exact rational vertices."""

from dataclasses import dataclass
from fractions import Fraction
from functools import cached_property
from itertools import product
from typing import Any, Sequence

from ..errors import VerifierInputError
from ..polycore.rational import format_rat, parse_rat
from .hull import HullResult, Point, exact_hull


@dataclass(frozen=True)
class Polytope:
    """conv(vertices) in R^ambient_dim.

    Construction canonicalizes: only extreme points are kept, sorted
    lexicographically, so equal polytopes compare equal.
    """

    ambient_dim: int
    vertices: tuple[Point, ...]

    def __post_init__(self):
        if self.ambient_dim < 1:
            raise VerifierInputError("ambient dimension must be positive", "dim")
        points = [tuple(parse_rat(c, "vertices") for c in v) for v in self.vertices]
        if not points:
            raise VerifierInputError("a polytope needs at least one vertex", "vertices")
        for v in points:
            if len(v) != self.ambient_dim:
                raise VerifierInputError(
                    f"vertex of length {len(v)} in a {self.ambient_dim}-dimensional polytope",
                    "vertices")
        hull = exact_hull(points)
        object.__setattr__(self, "vertices", hull.vertices)
        # keep the hull computed here; cached_property reads it from __dict__
        self.__dict__["hull"] = hull

    @cached_property
    def hull(self) -> HullResult:
        return exact_hull(self.vertices)

    @classmethod
    def from_points(cls, points: Sequence[Sequence[Any]]) -> "Polytope":
        if not points:
            raise VerifierInputError("a polytope needs at least one vertex", "vertices")
        return cls(len(points[0]), tuple(tuple(p) for p in points))

    @classmethod
    def from_json(cls, data: Any) -> "Polytope":
        if not isinstance(data, dict) or "vertices" not in data:
            raise VerifierInputError("polytope must be an object with 'vertices'", "polytope")
        vertices = data["vertices"]
        if not isinstance(vertices, list) or not vertices:
            raise VerifierInputError("'vertices' must be a nonempty list", "vertices")
        dim = int(data.get("dim", len(vertices[0])))
        return cls(dim, tuple(tuple(v) for v in vertices))

    def to_json(self) -> dict[str, Any]:
        return {"dim": self.ambient_dim,
                "vertices": [[format_rat(c) for c in v] for v in self.vertices]}

    @property
    def dim(self) -> int:
        """Affine dimension."""
        return self.hull.dim

    @property
    def volume(self) -> Fraction:
        return self.hull.volume

    def __add__(self, other: "Polytope") -> "Polytope":
        return minkowski_sum(self, other)


def _check_same_dim(p: Polytope, q: Polytope) -> None:
    if p.ambient_dim != q.ambient_dim:
        raise VerifierInputError(
            f"ambient dimensions differ: {p.ambient_dim} vs {q.ambient_dim}", "dim")


def minkowski_sum(p: Polytope, q: Polytope) -> Polytope:
    """conv{a + b : a in vert P, b in vert Q}."""
    _check_same_dim(p, q)
    points = {tuple(x + y for x, y in zip(a, b)) for a in p.vertices for b in q.vertices}
    return Polytope(p.ambient_dim, tuple(points))


def volume(p: Polytope) -> Fraction:
    return p.volume


def scale(p: Polytope, t: object) -> Polytope:
    t = parse_rat(t, "scale")
    if t < 0:
        raise VerifierInputError("scale factor must be nonnegative", "scale")
    return Polytope(p.ambient_dim, tuple(tuple(t * c for c in v) for v in p.vertices))


def translate(p: Polytope, v: Sequence[object]) -> Polytope:
    if len(v) != p.ambient_dim:
        raise VerifierInputError("translation vector has the wrong length", "vector")
    shift = tuple(parse_rat(c) for c in v)
    return Polytope(p.ambient_dim, tuple(tuple(a + b for a, b in zip(u, shift))
                                         for u in p.vertices))


def project(p: Polytope, drop: Sequence[int]) -> Polytope:
    """Delete the listed (0-based) coordinates."""
    dropped = set(drop)
    if any(i < 0 or i >= p.ambient_dim for i in dropped):
        raise VerifierInputError(f"coordinate index out of range in {sorted(dropped)}", "drop")
    keep = [i for i in range(p.ambient_dim) if i not in dropped]
    if not keep:
        raise VerifierInputError("cannot drop every coordinate", "drop")
    return Polytope(len(keep), tuple(tuple(v[i] for i in keep) for v in p.vertices))


def combination(bodies: Sequence[Polytope], weights: Sequence[object]) -> Polytope:
    """The Minkowski combination sum of w_i * P_i with nonnegative weights."""
    if not bodies or len(bodies) != len(weights):
        raise VerifierInputError("bodies and weights must match", "weights")
    total = None
    for body, weight in zip(bodies, weights):
        if parse_rat(weight) == 0:
            continue
        part = scale(body, weight)
        total = part if total is None else minkowski_sum(total, part)
    return total if total is not None else point(bodies[0].ambient_dim)


# canonical constructors

def point(n: int, at: Sequence[object] | None = None) -> Polytope:
    coords = tuple(parse_rat(c) for c in at) if at is not None else (Fraction(0),) * n
    return Polytope(n, (coords,))


def segment(a: Sequence[object], b: Sequence[object]) -> Polytope:
    return Polytope(len(a), (tuple(a), tuple(b)))


def unit_segment(n: int, i: int) -> Polytope:
    """[0, e_i] in R^n (0-based i)."""
    end = tuple(Fraction(int(j == i)) for j in range(n))
    return Polytope(n, ((Fraction(0),) * n, end))


def box(lows: Sequence[object], highs: Sequence[object]) -> Polytope:
    if len(lows) != len(highs):
        raise VerifierInputError("box bounds have different lengths", "box")
    ranges = [(parse_rat(lo), parse_rat(hi)) for lo, hi in zip(lows, highs)]
    if any(lo > hi for lo, hi in ranges):
        raise VerifierInputError("box lower bound exceeds upper bound", "box")
    return Polytope(len(ranges), tuple(product(*ranges)))


def cube(n: int) -> Polytope:
    return box([0] * n, [1] * n)


def simplex(n: int) -> Polytope:
    """conv(0, e_1, ..., e_n)."""
    vertices = [(Fraction(0),) * n]
    vertices += [tuple(Fraction(int(j == i)) for j in range(n)) for i in range(n)]
    return Polytope(n, tuple(vertices))


def cross_polytope(n: int) -> Polytope:
    vertices = []
    for i in range(n):
        for sign in (1, -1):
            vertices.append(tuple(Fraction(sign * int(j == i)) for j in range(n)))
    return Polytope(n, tuple(vertices))


def bipyramid() -> Polytope:
    """conv([-1, 1]^2 x {0}, e_3, -e_3)."""
    square = [(Fraction(a), Fraction(b), Fraction(0)) for a in (-1, 1) for b in (-1, 1)]
    apexes = [(Fraction(0), Fraction(0), Fraction(1)), (Fraction(0), Fraction(0), Fraction(-1))]
    return Polytope(3, tuple(square + apexes))
