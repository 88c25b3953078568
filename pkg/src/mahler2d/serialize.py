"""JSON wire formats for polygons and descent traces.

Coordinates and volumes are strings like "3" or "-5/7" so values round-trip
exactly; plain JSON integers are also accepted on input.
"""

from __future__ import annotations

import json
from fractions import Fraction
from typing import Any

from .geometry import GeometryError, Point, SymPolygon, make_polygon
from .reduction import DescentTrace, Move


def _rat_to_str(r: Fraction) -> str:
    return str(r)


def _rat_from_json(value: Any) -> Fraction:
    if isinstance(value, bool) or isinstance(value, float):
        raise GeometryError(f"coordinate {value!r} is not an exact rational")
    try:
        return Fraction(value)
    except (ValueError, TypeError) as exc:
        raise GeometryError(f"cannot parse rational from {value!r}") from exc


def polygon_to_dict(P: SymPolygon) -> dict:
    return {"vertices": [[_rat_to_str(v.x), _rat_to_str(v.y)] for v in P.vertices]}


def polygon_from_dict(data: Any) -> SymPolygon:
    if not isinstance(data, dict) or "vertices" not in data:
        raise GeometryError("polygon JSON must be an object with a 'vertices' key")
    verts = data["vertices"]
    if not isinstance(verts, list):
        raise GeometryError("'vertices' must be a list")
    points = []
    for entry in verts:
        if not isinstance(entry, (list, tuple)) or len(entry) != 2:
            raise GeometryError(f"vertex {entry!r} must be a pair")
        points.append(Point(_rat_from_json(entry[0]), _rat_from_json(entry[1])))
    return make_polygon(points)


def dump_polygon(P: SymPolygon) -> str:
    return json.dumps(polygon_to_dict(P), indent=2) + "\n"


def load_polygon(path: str) -> SymPolygon:
    with open(path) as fh:
        return polygon_from_dict(json.load(fh))


def save_polygon(P: SymPolygon, path: str) -> None:
    with open(path, "w") as fh:
        fh.write(dump_polygon(P))


def _move_to_dict(move: Move) -> dict:
    return {"side": move.side, "edge": move.edge, "gap": _rat_to_str(move.gap)}


def trace_to_dict(trace: DescentTrace) -> dict:
    return {
        "steps": [
            {
                "vertices": polygon_to_dict(step.polygon)["vertices"],
                "mahler": _rat_to_str(step.mahler),
                "move": _move_to_dict(step.move),
            }
            for step in trace.steps
        ],
        "final": polygon_to_dict(trace.final),
        "final_mahler": _rat_to_str(trace.final_mahler),
    }


def dump_trace(trace: DescentTrace) -> str:
    return json.dumps(trace_to_dict(trace), indent=2) + "\n"
