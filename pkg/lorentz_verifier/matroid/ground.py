"""Ground sets of convex bodies and their numerical dimension."""

from dataclasses import dataclass, field
from typing import Any, Optional, Sequence

from ..convgeom.hull import affine_dimension
from ..convgeom.mixed import MinkowskiCombiner
from ..convgeom.polytope import Polytope, cube
from ..errors import VerifierInputError
from ..verifier_logging import get_logger

logger = get_logger()


@dataclass(frozen=True)
class GroundSet:
    """Bodies A_1..A_s, the cap m and a full-dimensional reference body W."""

    bodies: tuple[Polytope, ...]
    m: int
    reference: Optional[Polytope] = field(default=None)

    def __post_init__(self):
        bodies = tuple(self.bodies)
        if not bodies:
            raise VerifierInputError("ground set needs at least one body", "bodies")
        n = bodies[0].ambient_dim
        if any(b.ambient_dim != n for b in bodies):
            raise VerifierInputError("bodies live in different dimensions", "bodies")
        if isinstance(self.m, bool) or not isinstance(self.m, int) or not 1 <= self.m <= n:
            raise VerifierInputError(f"m must lie in [1, {n}], got {self.m!r}", "m")
        reference = self.reference if self.reference is not None else cube(n)
        if reference.ambient_dim != n:
            raise VerifierInputError("W has the wrong ambient dimension", "W")
        if reference.dim != n:
            raise VerifierInputError(f"W must be full-dimensional, got dim {reference.dim}", "W")
        object.__setattr__(self, "bodies", bodies)
        object.__setattr__(self, "reference", reference)

    @classmethod
    def from_json(cls, data: Any) -> "GroundSet":
        """``{"m": m, "W": <polytope> | "unit-cube", "bodies": [<polytope>, ...]}``."""
        if not isinstance(data, dict) or not isinstance(data.get("bodies"), list):
            raise VerifierInputError("ground set must be an object with a 'bodies' list", "bodies")
        if "m" not in data:
            raise VerifierInputError("missing 'm'", "m")
        bodies = tuple(Polytope.from_json(b) for b in data["bodies"])
        raw_w = data.get("W", "unit-cube")
        if raw_w == "unit-cube":
            reference = None
        elif isinstance(raw_w, dict):
            reference = Polytope.from_json(raw_w)
        else:
            raise VerifierInputError("'W' must be a polytope or \"unit-cube\"", "W")
        return cls(bodies, data["m"], reference)

    def to_json(self) -> dict[str, Any]:
        return {"m": self.m, "W": self.reference.to_json(),
                "bodies": [b.to_json() for b in self.bodies]}

    @property
    def ambient_dim(self) -> int:
        return self.bodies[0].ambient_dim

    @property
    def size(self) -> int:
        return len(self.bodies)


def affine_dim(p: Polytope) -> int:
    """Dimension of the affine hull of the vertices, by exact rank."""
    return affine_dimension(p.vertices)


def nd(a: Polytope, ground: GroundSet) -> int:
    """max{k in [1, m] : V(A[k], W[n - k]) > 0}, or 0 when no k qualifies."""
    n = ground.ambient_dim
    if a.ambient_dim != n:
        raise VerifierInputError("body has the wrong ambient dimension", "A")
    combiner = MinkowskiCombiner([a, ground.reference])
    best = 0
    for k in range(1, ground.m + 1):
        if combiner.mixed_volume([k, n - k]) > 0:
            best = k
    return best


def nd_by_dimension(a: Polytope, ground: GroundSet) -> int:
    """min(m, dim A): the value nd must agree with."""
    return min(ground.m, affine_dim(a))


def minkowski_total(bodies: Sequence[Polytope]) -> Polytope:
    total = bodies[0]
    for body in bodies[1:]:
        total = total + body
    return total
