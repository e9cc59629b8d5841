"""
Shared fixtures for the lorentz-verifier test suite.

Provides test fixtures for:
- Known polynomials (Lorentzian and not)
- Canonical polytopes
- Instance files for CLI runs
- An isolated working directory so no stray settings file is read
"""

import json
import os
import random
from pathlib import Path

import pytest

from lorentz_verifier.convgeom.polytope import bipyramid, cube, segment, simplex, unit_segment
from lorentz_verifier.harness.fuzz import FuzzSettings
from lorentz_verifier.harness.reproduce import huh_polynomial
from lorentz_verifier.polycore.codec import poly_to_json
from lorentz_verifier.polycore.polynomial import HomPoly


# ---------------------------------------------------------------------------
# Environment isolation
# ---------------------------------------------------------------------------

@pytest.fixture(autouse=True)
def isolated_environment(tmp_path, monkeypatch):
    """Run every test from an empty directory with no LORENTZ_VERIFIER_* variables."""
    for name in list(os.environ):
        if name.startswith("LORENTZ_VERIFIER_"):
            monkeypatch.delenv(name, raising=False)
    monkeypatch.chdir(tmp_path)
    yield tmp_path


# ---------------------------------------------------------------------------
# Polynomials
# ---------------------------------------------------------------------------

@pytest.fixture()
def huh() -> HomPoly:
    """Lorentzian cubic that breaks the optimal rKT constant."""
    return huh_polynomial()


@pytest.fixture()
def x1x2() -> HomPoly:
    return HomPoly(2, 2, {(1, 1): 1})


@pytest.fixture()
def sum_of_squares() -> HomPoly:
    """x1^2 + x2^2: nonnegative coefficients, support not M-convex."""
    return HomPoly(2, 2, {(2, 0): 1, (0, 2): 1})


@pytest.fixture()
def positive_definite_quadratic() -> HomPoly:
    """x1^2 + x1 x2 + x2^2: M-convex support, Hessian with two positive eigenvalues."""
    return HomPoly(2, 2, {(2, 0): 1, (1, 1): 1, (0, 2): 1})


@pytest.fixture()
def rng() -> random.Random:
    return random.Random(12345)


# ---------------------------------------------------------------------------
# Polytopes
# ---------------------------------------------------------------------------

@pytest.fixture()
def cube3():
    return cube(3)


@pytest.fixture()
def simplex3():
    return simplex(3)


@pytest.fixture()
def pyramid():
    return bipyramid()


@pytest.fixture()
def coplanar_segments():
    """[0,e1], [0,e2] and [0,e1+e2] in R^3: a rank-2 uniform matroid on three elements."""
    return (unit_segment(3, 0), unit_segment(3, 1), segment((0, 0, 0), (1, 1, 0)))


# ---------------------------------------------------------------------------
# Fuzz settings
# ---------------------------------------------------------------------------

@pytest.fixture()
def small_settings() -> FuzzSettings:
    """Instance sizes small enough for a handful of trials per test."""
    return FuzzSettings(points_per_instance=2, max_vars=3, max_degree=3, max_dim=3,
                        max_vertices=6, sample_splittings=50, max_splittings=500)


# ---------------------------------------------------------------------------
# Instance files
# ---------------------------------------------------------------------------

def _write(path: Path, payload) -> Path:
    path.write_text(json.dumps(payload, indent=2))
    return path


@pytest.fixture()
def write_instance(tmp_path):
    """Write a JSON payload under tmp_path and return its path as a string."""

    def _writer(name: str, payload) -> str:
        return str(_write(tmp_path / name, payload))

    return _writer


@pytest.fixture()
def huh_rkt_file(write_instance, huh) -> str:
    return write_instance("huh_rkt.json", {
        "poly": poly_to_json(huh),
        "points": [["1", "0", "0"]],
        "mode": "rkt-optimal",
        "sweep": "full",
    })


@pytest.fixture()
def lorentzian_file(write_instance, x1x2) -> str:
    return write_instance("x1x2.json", {"poly": poly_to_json(x1x2),
                                        "points": [["1", "1"], ["1/2", "3"]]})
