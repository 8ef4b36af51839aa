"""JSON file formats for polytopes, ground sets and star configurations."""

from __future__ import annotations

import json
from typing import Any, List, Tuple

from .polytope import Polytope, hull
from .rational import Point, RationalParseError, format_point, parse_point


class DataError(ValueError):
    """Malformed input data (bad JSON shape, rationals or dimensions)."""


def _load(source) -> Any:
    if isinstance(source, (dict, list)):
        return source
    try:
        with open(source, encoding="utf-8") as fh:
            return json.load(fh)
    except json.JSONDecodeError as exc:
        raise DataError(f"{source}: invalid JSON at line {exc.lineno} column {exc.colno}: {exc.msg}") from None
    except OSError as exc:
        raise DataError(f"{source}: {exc.strerror}") from None


def _dim(obj, where: str) -> int:
    if not isinstance(obj, dict) or "dim" not in obj:
        raise DataError(f"{where}: expected an object with a 'dim' field")
    dim = obj["dim"]
    if isinstance(dim, bool) or not isinstance(dim, int) or dim < 1:
        raise DataError(f"{where}: 'dim' must be a positive integer")
    return dim


def _points(raw, dim: int, where: str) -> List[Point]:
    if not isinstance(raw, list):
        raise DataError(f"{where}: expected a list of points")
    try:
        return [parse_point(p, dim, f"{where}[{i}]") for i, p in enumerate(raw)]
    except RationalParseError as exc:
        raise DataError(str(exc)) from None


def polytope_from_json(obj, where: str = "polytope") -> Polytope:
    dim = _dim(obj, where)
    if "vertices" not in obj:
        raise DataError(f"{where}: missing 'vertices'")
    return hull(_points(obj["vertices"], dim, f"{where}.vertices"), dim)


def polytope_to_json(P: Polytope) -> dict:
    return {"dim": P.dim, "vertices": [format_point(v) for v in P.vertices]}


def load_polytope(source) -> Polytope:
    return polytope_from_json(_load(source), str(source) if isinstance(source, str) else "polytope")


def ground_set_from_json(obj, where: str = "ground set") -> Tuple[int, List[Point]]:
    dim = _dim(obj, where)
    if "points" not in obj:
        raise DataError(f"{where}: missing 'points'")
    pts = _points(obj["points"], dim, f"{where}.points")
    if len(set(pts)) != len(pts):
        raise DataError(f"{where}: duplicate points")
    return dim, pts


def load_ground_set(source) -> Tuple[int, List[Point]]:
    return ground_set_from_json(_load(source), str(source) if isinstance(source, str) else "ground set")


def star_rays_from_json(obj, where: str = "star config") -> Tuple[int, List[Point]]:
    dim = _dim(obj, where)
    if "rays" not in obj:
        raise DataError(f"{where}: missing 'rays'")
    return dim, _points(obj["rays"], dim, f"{where}.rays")


def load_star_rays(source) -> Tuple[int, List[Point]]:
    return star_rays_from_json(_load(source), str(source) if isinstance(source, str) else "star config")


def load_json(source) -> Any:
    return _load(source)
