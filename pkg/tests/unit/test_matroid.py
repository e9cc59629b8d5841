"""Unit tests for the numerical dimension and its polymatroid."""

import pytest

from lorentz_verifier.convgeom.polytope import Polytope, cube, point, segment, unit_segment
from lorentz_verifier.errors import BudgetError, VerifierInputError
from lorentz_verifier.matroid.ground import (
    GroundSet,
    affine_dim,
    minkowski_total,
    nd,
    nd_by_dimension,
)
from lorentz_verifier.matroid.polymatroid import (
    RankOracle,
    check_polymatroid,
    is_matroid,
    rank_vector,
    submodularity_triple_check,
)


def plane_segments():
    """Three segments in pairwise independent directions of the plane."""
    return (unit_segment(2, 0), unit_segment(2, 1), segment((0, 0), (1, 1)))


class TestGroundSet:
    """Test ground set validation and the numerical dimension."""

    def test_default_reference_is_cube(self):
        """Test that W defaults to the unit cube."""
        ground = GroundSet((cube(3),), 2)
        assert ground.reference == cube(3)
        assert ground.size == 1

    @pytest.mark.parametrize("m", [0, 4, True])
    def test_invalid_m(self, m):
        """Test that m must lie in [1, n]."""
        with pytest.raises(VerifierInputError):
            GroundSet((cube(3),), m)

    def test_reference_must_be_full_dimensional(self):
        """Test that a flat W is rejected."""
        with pytest.raises(VerifierInputError, match="full-dimensional"):
            GroundSet((cube(3),), 2, unit_segment(3, 0))

    def test_from_json(self):
        """Test the wire form with the unit-cube shorthand."""
        data = {"m": 2, "W": "unit-cube", "bodies": [unit_segment(2, 0).to_json()]}
        ground = GroundSet.from_json(data)
        assert ground.reference == cube(2)
        assert ground.bodies == (unit_segment(2, 0),)

    def test_nd(self):
        """Test nd against the dimension of the body."""
        ground = GroundSet((cube(3),), 2)
        assert nd(cube(3), ground) == 2
        assert nd(unit_segment(3, 0), ground) == 1
        assert nd(point(3), ground) == 0
        assert nd_by_dimension(unit_segment(3, 2), ground) == 1
        assert nd_by_dimension(cube(3), ground) == 2

    def test_affine_dim_and_total(self):
        """Test affine dimension of a Minkowski total."""
        total = minkowski_total([unit_segment(3, 0), unit_segment(3, 1)])
        assert affine_dim(total) == 2
        assert total == Polytope.from_points([(0, 0, 0), (1, 0, 0), (0, 1, 0), (1, 1, 0)])


class TestPolymatroid:
    """Test the rank function and the axiom checks."""

    def test_uniform_matroid_ranks(self):
        """Test that three plane segments with m = 2 give U(2, 3)."""
        oracle = RankOracle(GroundSet(plane_segments(), 2))
        assert rank_vector(oracle) == [0, 1, 1, 2, 1, 2, 2, 2]
        assert oracle.cached_subsets == 8
        assert is_matroid(oracle)

    def test_polymatroid_margin(self):
        """Test that the submodularity slack of U(2, 3) bottoms out at zero."""
        verdict = check_polymatroid(RankOracle(GroundSet(plane_segments(), 2)))
        assert verdict.holds
        assert verdict.margin == 0
        assert verdict.checked == 64

    def test_point_is_a_loop(self):
        """Test that a point body fails looplessness with its 1-based index."""
        bodies = (unit_segment(3, 0), unit_segment(3, 1), unit_segment(3, 2), point(3))
        verdict = check_polymatroid(RankOracle(GroundSet(bodies, 2)))
        assert not verdict.holds
        assert verdict.witness["property"] == "looplessness"
        assert verdict.witness["body"] == 4

    def test_full_dimensional_body_is_not_a_matroid(self):
        """Test that a singleton of rank 3 is a polymatroid but not a matroid."""
        oracle = RankOracle(GroundSet((cube(3),), 3))
        assert check_polymatroid(oracle).holds
        assert not is_matroid(oracle)

    def test_rank_of_index_list(self):
        """Test the 0-based subset interface and its validation."""
        oracle = RankOracle(GroundSet(plane_segments(), 2))
        assert oracle.rank([0, 2]) == 2
        assert oracle.rank([]) == 0
        with pytest.raises(VerifierInputError):
            oracle.rank([3])

    def test_budget(self):
        """Test that exhaustive enumeration respects the ground set cap."""
        oracle = RankOracle(GroundSet(plane_segments(), 2))
        with pytest.raises(BudgetError):
            rank_vector(oracle, max_ground_set=2)

    def test_triple_check(self, coplanar_segments):
        """Test nd(A + B + C) + nd(C) <= nd(A + C) + nd(B + C) on coplanar segments."""
        verdict = submodularity_triple_check(*coplanar_segments, m=2)
        assert verdict.holds
        assert verdict.margin == 1
        assert verdict.details["nd_ABC"] == 2
