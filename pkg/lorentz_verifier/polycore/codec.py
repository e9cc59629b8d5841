"""JSON wire format for polynomials, matrices and report payloads.

Rationals travel as ``"p/q"`` strings (``"p"`` when integral) so that
nothing ever passes through a float.
"""

import json
from dataclasses import asdict, is_dataclass
from fractions import Fraction
from pathlib import Path
from typing import Any, Sequence

from ..errors import VerifierInputError
from .polynomial import HomPoly
from .rational import format_rat, parse_rat, parse_vector
from .symmatrix import SymMatrix


def poly_to_json(f: HomPoly) -> dict[str, Any]:
    return {
        "nvars": f.nvars,
        "degree": f.degree,
        "terms": [{"exp": list(exp), "coef": format_rat(coef)} for exp, coef in f.sorted_terms()],
    }


def poly_from_json(data: Any) -> HomPoly:
    if not isinstance(data, dict):
        raise VerifierInputError("polynomial must be a JSON object", "poly")
    try:
        nvars = int(data["nvars"])
        degree = int(data["degree"])
        raw_terms = data.get("terms", [])
    except (KeyError, TypeError, ValueError) as e:
        raise VerifierInputError(f"missing or invalid polynomial field: {e}", "poly")
    terms: dict[tuple[int, ...], Fraction] = {}
    for term in raw_terms:
        if not isinstance(term, dict) or "exp" not in term or "coef" not in term:
            raise VerifierInputError("each term needs 'exp' and 'coef'", "terms")
        exp = tuple(term["exp"])
        if any(isinstance(e, bool) or not isinstance(e, int) for e in exp):
            raise VerifierInputError(f"exponents must be integers: {term['exp']}", "exp")
        if exp in terms:
            raise VerifierInputError(f"duplicate exponent {list(exp)}", "terms")
        terms[exp] = parse_rat(term["coef"], "coef")
    return HomPoly(nvars, degree, terms)


def matrix_from_json(data: Any, field: str = "matrix") -> SymMatrix:
    if not isinstance(data, list) or not all(isinstance(row, list) for row in data):
        raise VerifierInputError("matrix must be a list of rows", field)
    return SymMatrix.from_rows([[parse_rat(x, field) for x in row] for row in data])


def matrix_to_json(m: SymMatrix) -> list[list[str]]:
    return [[format_rat(x) for x in row] for row in m.entries]


def jsonable(value: Any) -> Any:
    """Recursively turn verifier objects into JSON-ready structures."""
    if isinstance(value, bool) or value is None or isinstance(value, (int, str)):
        return value
    if isinstance(value, Fraction):
        return format_rat(value)
    if isinstance(value, float):
        return value
    if isinstance(value, HomPoly):
        return poly_to_json(value)
    if isinstance(value, SymMatrix):
        return matrix_to_json(value)
    if hasattr(value, "to_json"):
        return value.to_json()
    if is_dataclass(value) and not isinstance(value, type):
        return jsonable(asdict(value))
    if isinstance(value, dict):
        return {str(k): jsonable(v) for k, v in value.items()}
    if isinstance(value, (list, tuple, set, frozenset)):
        items = sorted(value) if isinstance(value, (set, frozenset)) else value
        return [jsonable(v) for v in items]
    raise TypeError(f"cannot serialize {type(value).__name__}")


def read_json(path: Path | str) -> Any:
    path = Path(path)
    try:
        with open(path, "r") as f:
            return json.load(f)
    except FileNotFoundError:
        raise VerifierInputError(f"file not found: {path}", "input")
    except json.JSONDecodeError as e:
        raise VerifierInputError(f"invalid JSON in {path}: {e}", "input")


def dumps(value: Any) -> str:
    return json.dumps(jsonable(value), sort_keys=True, indent=2)


def require(data: Any, key: str, context: str = "input") -> Any:
    if not isinstance(data, dict) or key not in data:
        raise VerifierInputError(f"missing required key '{key}'", context)
    return data[key]


def parse_points(data: Any, length: int, field: str = "points") -> list[tuple[Fraction, ...]]:
    if not isinstance(data, list):
        raise VerifierInputError("expected a list of points", field)
    return [parse_vector(p, field, length) for p in data]


def parse_point_groups(data: Any, length: int, group: int,
                       field: str = "points") -> list[tuple[tuple[Fraction, ...], ...]]:
    """Lists of fixed-size vector groups, e.g. (x, y, z) triples."""
    if not isinstance(data, list):
        raise VerifierInputError("expected a list of vector groups", field)
    groups = []
    for entry in data:
        if not isinstance(entry, list) or len(entry) != group:
            raise VerifierInputError(f"each entry must hold {group} vectors", field)
        groups.append(tuple(tuple(parse_rat(x, field) for x in _vector(v, length, field))
                            for v in entry))
    return groups


def _vector(v: Any, length: int, field: str) -> Sequence[Any]:
    if not isinstance(v, list) or len(v) != length:
        raise VerifierInputError(f"expected a vector of length {length}", field)
    return v
