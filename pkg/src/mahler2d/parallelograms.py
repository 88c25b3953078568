"""Inscribed parallelograms of the two types, and the hexagon carving that
compares them.

For an edge e, the type-1 parallelogram is the hull of the edge pair +-e; for
a vertex x, the type-2 parallelogram is the hull of the four vertices adjacent
to +-x.  Summed over the whole polygon, type-1 parallelograms are smaller than
type-2 ones, with equality exactly for hexagons; the carving exposes this as a
per-vertex triangle comparison.
"""

from __future__ import annotations

from dataclasses import dataclass
from fractions import Fraction

from .geometry import (
    GeometryError,
    Point,
    Rational,
    SymPolygon,
    _canonical_rotation,
    _shoelace_twice,
)


class DegenerateParallelogram(GeometryError):
    """The vertex-based parallelogram degenerates when the polygon has n = 2."""


@dataclass(frozen=True)
class Parallelogram:
    """A centrally symmetric quadrilateral, corners ccw from the lexicographic
    minimum."""

    corners: tuple

    @property
    def area(self) -> Rational:
        return _shoelace_twice(self.corners) / 2


@dataclass(frozen=True)
class Triangle:
    corners: tuple

    @property
    def area(self) -> Rational:
        """Unsigned area."""
        return abs(_shoelace_twice(self.corners)) / 2


def _make_parallelogram(a: Point, b: Point) -> Parallelogram:
    """Hull of {a, b, -a, -b}, assuming cross(a, b) > 0 (ccw, nondegenerate)."""
    if a.cross(b) <= 0:
        raise DegenerateParallelogram(f"corners {a}, {b} do not span a ccw parallelogram")
    return Parallelogram(_canonical_rotation([a, b, -a, -b]))


def edge_parallelogram(P: SymPolygon, s: int) -> Parallelogram:
    """Type-1 parallelogram: the hull of the edge pair +-s."""
    p, q = P.edge(s)
    return _make_parallelogram(p, q)


def vertex_parallelogram(P: SymPolygon, x: int) -> Parallelogram:
    """Type-2 parallelogram: the hull of the four vertices adjacent to +-x.

    Raises :class:`DegenerateParallelogram` for n = 2, where the four
    neighbours collapse to an antipodal pair.
    """
    if P.n < 3:
        raise DegenerateParallelogram("vertex parallelogram needs n >= 3")
    return _make_parallelogram(P.vertex(x - 1), P.vertex(x + 1))


def edge_parallelogram_area(P: SymPolygon, s: int) -> Rational:
    """area(edge_parallelogram(P, s)) in a single cross product.

    The hull of {a, b, -a, -b} has shoelace sum 4 cross(a, b).
    """
    p, q = P.edge(s)
    return 2 * p.cross(q)


def vertex_parallelogram_area(P: SymPolygon, x: int) -> Rational:
    """area(vertex_parallelogram(P, x)) in a single cross product."""
    if P.n < 3:
        raise DegenerateParallelogram("vertex parallelogram needs n >= 3")
    return 2 * P.vertex(x - 1).cross(P.vertex(x + 1))


@dataclass(frozen=True)
class SumComparison:
    """Totals of the two parallelogram families over a polygon."""

    lhs: Rational  # sum over edges of the type-1 areas
    rhs: Rational  # sum over vertices of the type-2 areas
    relation: str  # "<" or "="


def compare_parallelogram_sums(P: SymPolygon) -> SumComparison:
    """Compare the edge-based and vertex-based parallelogram totals.

    The edge total never exceeds the vertex total, and they are equal exactly
    when the polygon is a hexagon (n = 3).  Both facts are asserted here; a
    violation would falsify the theorem this package implements.
    """
    if P.n < 3:
        raise DegenerateParallelogram("comparison needs n >= 3")
    m = len(P.vertices)
    lhs = sum((edge_parallelogram_area(P, s) for s in range(m)), Fraction(0))
    rhs = sum((vertex_parallelogram_area(P, x) for x in range(m)), Fraction(0))
    relation = "=" if lhs == rhs else "<"
    assert lhs <= rhs, f"edge total {lhs} exceeds vertex total {rhs}"
    assert (relation == "=") == (P.n == 3), f"equality characterization failed at n={P.n}"
    return SumComparison(lhs, rhs, relation)


@dataclass(frozen=True)
class HexagonCarving:
    """The six-vertex sub-hexagon at a vertex, carved two ways.

    The hexagon H(x) = [x-1, x, x+1, x+n-1, x+n, x+n+1] contains both the
    type-1 parallelogram of the edge [x-1, x] and the type-2 parallelogram of
    x.  Removing either leaves an antipodal pair of triangles:

        area(H) = area(P1) + 2 * area(t1) = area(P2) + 2 * area(t2)

    with t1 = [x, x+1, x+n-1] and t2 = [x-1, x, x+1].
    """

    hexagon: tuple
    t1: Triangle
    t2: Triangle

    @property
    def hexagon_area(self) -> Rational:
        return _shoelace_twice(self.hexagon) / 2


def hexagon_carving(P: SymPolygon, x: int) -> HexagonCarving:
    """Carve the hexagon at vertex x into parallelogram-plus-triangles."""
    if P.n < 3:
        raise DegenerateParallelogram("hexagon carving needs n >= 3")
    n = P.n
    hexagon = tuple(P.vertex(x + k) for k in (-1, 0, 1, n - 1, n, n + 1))
    t1 = Triangle((P.vertex(x), P.vertex(x + 1), P.vertex(x + n - 1)))
    t2 = Triangle((P.vertex(x - 1), P.vertex(x), P.vertex(x + 1)))
    return HexagonCarving(hexagon, t1, t2)
