"""The numerical-dimension rank function and verification of the polymatroid axioms."""

from typing import Iterable, Optional

import numpy as np

from ..convgeom.polytope import Polytope
from ..errors import BudgetError, VerifierInputError
from ..lorentz.verdict import Verdict
from ..verifier_logging import get_logger
from .ground import GroundSet, minkowski_total, nd

logger = get_logger()

MAX_GROUND_SET = 12
_ROW_CHUNK = 256


def _members(mask: int, size: int) -> list[int]:
    """1-based indices of the bodies in a subset bitmask."""
    return [i + 1 for i in range(size) if mask >> i & 1]


class RankOracle:
    """r(I) = nd(sum of A_i for i in I), cached by subset bitmask."""

    def __init__(self, ground: GroundSet):
        self.ground = ground
        self._cache: dict[int, int] = {0: 0}

    def _mask(self, subset: Iterable[int]) -> int:
        mask = 0
        for i in subset:
            if isinstance(i, bool) or not isinstance(i, int) or not 0 <= i < self.ground.size:
                raise VerifierInputError(f"index {i!r} is outside the ground set", "subset")
            mask |= 1 << i
        return mask

    def rank_of_mask(self, mask: int) -> int:
        cached = self._cache.get(mask)
        if cached is not None:
            return cached
        bodies = [b for i, b in enumerate(self.ground.bodies) if mask >> i & 1]
        value = nd(minkowski_total(bodies), self.ground)
        self._cache[mask] = value
        return value

    def rank(self, subset: Iterable[int]) -> int:
        """Rank of a set of 0-based body indices."""
        return self.rank_of_mask(self._mask(subset))

    def clear(self) -> None:
        self._cache = {0: 0}

    @property
    def cached_subsets(self) -> int:
        return len(self._cache)


def rank_vector(oracle: RankOracle, max_ground_set: int = MAX_GROUND_SET) -> list[int]:
    """Ranks of every subset, indexed by bitmask."""
    size = oracle.ground.size
    if size > max_ground_set:
        raise BudgetError(
            f"ground set of {size} bodies exceeds the exhaustive budget of {max_ground_set}")
    return [oracle.rank_of_mask(mask) for mask in range(1 << size)]


def _pair_witness(i: int, j: int, ranks: np.ndarray, size: int) -> dict:
    return {
        "property": "submodularity",
        "I": _members(i, size),
        "J": _members(j, size),
        "r_I": int(ranks[i]),
        "r_J": int(ranks[j]),
        "r_union": int(ranks[i | j]),
        "r_intersection": int(ranks[i & j]),
    }


def check_polymatroid(oracle: RankOracle, max_ground_set: int = MAX_GROUND_SET) -> Verdict:
    """Normalization, looplessness, monotonicity and submodularity, exhaustively.

    The margin is the smallest r(I) + r(J) - r(I | J) - r(I & J) over all pairs.
    """
    size = oracle.ground.size
    ranks = np.array(rank_vector(oracle, max_ground_set), dtype=np.int64)
    total = 1 << size
    logger.debug(f"polymatroid check: {size} bodies, {total} subsets")

    if ranks[0] != 0:
        return Verdict.failed({"property": "normalization", "r_empty": int(ranks[0])})
    if ranks.min() < 0 or ranks.max() > oracle.ground.m:
        bad = int(np.flatnonzero((ranks < 0) | (ranks > oracle.ground.m))[0])
        return Verdict.failed({"property": "range", "I": _members(bad, size),
                               "rank": int(ranks[bad])})

    for i in range(size):
        if ranks[1 << i] < 1:
            return Verdict.failed({"property": "looplessness", "body": i + 1,
                                   "rank": int(ranks[1 << i])})

    masks = np.arange(total, dtype=np.int64)
    for i in range(size):
        without = masks[((masks >> i) & 1) == 0]
        drops = ranks[without] > ranks[without | (1 << i)]
        if drops.any():
            smaller = int(without[np.flatnonzero(drops)[0]])
            return Verdict.failed({"property": "monotonicity", "I": _members(smaller, size),
                                   "added": i + 1})

    margin: Optional[int] = None
    for start in range(0, total, _ROW_CHUNK):
        rows = masks[start:start + _ROW_CHUNK]
        slack = (ranks[rows][:, None] + ranks[None, :]
                 - ranks[rows[:, None] | masks[None, :]]
                 - ranks[rows[:, None] & masks[None, :]])
        low = int(slack.min())
        margin = low if margin is None else min(margin, low)
        if low < 0:
            r, c = np.argwhere(slack < 0)[0]
            witness = _pair_witness(int(rows[r]), int(c), ranks, size)
            logger.warning(f"submodularity violation: {witness}")
            return Verdict.failed(witness, margin=margin, checked=total * total)
    return Verdict.passed(margin=margin, checked=total * total)


def is_matroid(oracle: RankOracle, max_ground_set: int = MAX_GROUND_SET) -> bool:
    """A polymatroid whose singletons all have rank at most 1."""
    if not check_polymatroid(oracle, max_ground_set).holds:
        return False
    return all(oracle.rank([i]) <= 1 for i in range(oracle.ground.size))


def submodularity_triple_check(a: Polytope, b: Polytope, c: Polytope, m: int,
                               reference: Optional[Polytope] = None) -> Verdict:
    """nd(A + B + C) + nd(C) <= nd(A + C) + nd(B + C)."""
    oracle = RankOracle(GroundSet((a, b, c), m, reference))
    lhs = oracle.rank([0, 1, 2]) + oracle.rank([2])
    rhs = oracle.rank([0, 2]) + oracle.rank([1, 2])
    details = {"nd_ABC": oracle.rank([0, 1, 2]), "nd_C": oracle.rank([2]),
               "nd_AC": oracle.rank([0, 2]), "nd_BC": oracle.rank([1, 2])}
    if lhs > rhs:
        return Verdict.failed(details, margin=rhs - lhs)
    return Verdict.passed(margin=rhs - lhs, **details)
