"""Exact primitives: points, centrally symmetric polygons, polar duals, Mahler volume.

Every coordinate is a ``fractions.Fraction``, so all predicates and areas are
exact.  Floats never enter this module; they appear only in the Monte Carlo
oracle and in SVG output.
"""

from __future__ import annotations

from dataclasses import dataclass
from fractions import Fraction
from functools import lru_cache
from typing import Iterable, Union

Rational = Fraction
Coord = Union[Rational, int, str]


# ---------------------------------------------------------------------------
# Errors
# ---------------------------------------------------------------------------

class GeometryError(ValueError):
    """Base class for invalid geometric input."""


class TooFewVertices(GeometryError):
    """Fewer than 4 vertices were supplied."""


class NotCentrallySymmetric(GeometryError):
    """Vertex list is not antipodally paired."""


class NotConvex(GeometryError):
    """Vertex list is not in strictly convex position (collinear triples count)."""


class SingularMap(GeometryError):
    """2x2 matrix with zero determinant."""


# ---------------------------------------------------------------------------
# Points and linear maps
# ---------------------------------------------------------------------------

@dataclass(frozen=True)
class Point:
    """A point of the plane with exact rational coordinates."""

    x: Rational
    y: Rational

    def __post_init__(self):
        if not isinstance(self.x, Fraction):
            object.__setattr__(self, "x", Fraction(self.x))
        if not isinstance(self.y, Fraction):
            object.__setattr__(self, "y", Fraction(self.y))

    def __add__(self, other: "Point") -> "Point":
        return Point(self.x + other.x, self.y + other.y)

    def __sub__(self, other: "Point") -> "Point":
        return Point(self.x - other.x, self.y - other.y)

    def __neg__(self) -> "Point":
        return Point(-self.x, -self.y)

    def dot(self, other: "Point") -> Rational:
        return self.x * other.x + self.y * other.y

    def cross(self, other: "Point") -> Rational:
        return self.x * other.y - self.y * other.x

    def key(self) -> tuple:
        """Lexicographic sort key (x first, then y)."""
        return (self.x, self.y)


PointLike = Union[Point, tuple]


def as_point(p: PointLike) -> Point:
    if isinstance(p, Point):
        return p
    x, y = p
    return Point(Fraction(x), Fraction(y))


@dataclass(frozen=True)
class LinearMap:
    """An invertible 2x2 matrix with rows (a b), (c d)."""

    a: Rational
    b: Rational
    c: Rational
    d: Rational

    def __post_init__(self):
        for f in ("a", "b", "c", "d"):
            object.__setattr__(self, f, Fraction(getattr(self, f)))
        if self.det == 0:
            raise SingularMap(f"matrix {self} has zero determinant")

    @property
    def det(self) -> Rational:
        return self.a * self.d - self.b * self.c

    def __call__(self, p: Point) -> Point:
        return Point(self.a * p.x + self.b * p.y, self.c * p.x + self.d * p.y)

    def compose(self, other: "LinearMap") -> "LinearMap":
        """Matrix product self @ other (apply ``other`` first)."""
        return LinearMap(
            self.a * other.a + self.b * other.c,
            self.a * other.b + self.b * other.d,
            self.c * other.a + self.d * other.c,
            self.c * other.b + self.d * other.d,
        )

    def inverse(self) -> "LinearMap":
        d = self.det
        return LinearMap(self.d / d, -self.b / d, -self.c / d, self.a / d)

    @staticmethod
    def identity() -> "LinearMap":
        return LinearMap(1, 0, 0, 1)


@dataclass(frozen=True)
class HalfPlane:
    """The constraint <x, w> <= 1.

    ``w`` is the vertex of the polar body dual to the boundary line.  The unit
    normal and offset of the line are w/|w| and 1/|w|; neither is stored since
    |w| is irrational in general.
    """

    w: Point

    def __post_init__(self):
        if self.w.x == 0 and self.w.y == 0:
            raise GeometryError("half-plane normal must be nonzero")

    def contains(self, p: Point) -> bool:
        return p.dot(self.w) <= 1

    def boundary_contains(self, p: Point) -> bool:
        return p.dot(self.w) == 1


def line_intersection(h1: HalfPlane, h2: HalfPlane) -> Point:
    """Intersection of the boundary lines <x,w1> = 1 and <x,w2> = 1."""
    det = h1.w.cross(h2.w)
    if det == 0:
        raise SingularMap("boundary lines are parallel")
    return Point((h2.w.y - h1.w.y) / det, (h1.w.x - h2.w.x) / det)


# ---------------------------------------------------------------------------
# Centrally symmetric convex polygons
# ---------------------------------------------------------------------------

@dataclass(frozen=True)
class SymPolygon:
    """A centrally symmetric, strictly convex polygon with 2n vertices.

    Vertices are in counterclockwise cyclic order, antipodally paired
    (vertices[i + n] == -vertices[i]), with vertex 0 the lexicographically
    smallest point.  Instances are produced by :func:`make_polygon`, which
    checks all of this; equality of polygons is equality of vertex tuples.
    """

    vertices: tuple

    def __hash__(self):
        # polygons are dict keys in several caches; Fraction hashing is
        # costly enough that the tuple hash is worth computing once
        h = self.__dict__.get("_hash")
        if h is None:
            h = hash(self.vertices)
            object.__setattr__(self, "_hash", h)
        return h

    @property
    def n(self) -> int:
        """Half the vertex count (the number of antipodal pairs)."""
        return len(self.vertices) // 2

    def vertex(self, i: int) -> Point:
        return self.vertices[i % len(self.vertices)]

    def edge(self, i: int) -> tuple:
        """Endpoints of edge i, which joins vertices i and i+1."""
        m = len(self.vertices)
        return (self.vertices[i % m], self.vertices[(i + 1) % m])

    def contains(self, p: Point) -> bool:
        """Point-in-polygon test, boundary included."""
        m = len(self.vertices)
        return all(
            (self.vertices[(i + 1) % m] - self.vertices[i]).cross(p - self.vertices[i]) >= 0
            for i in range(m)
        )

    def contains_polygon(self, other: "SymPolygon") -> bool:
        return all(self.contains(v) for v in other.vertices)


def _canonical_rotation(points: list) -> tuple:
    start = min(range(len(points)), key=lambda i: points[i].key())
    return tuple(points[start:] + points[:start])


def _shoelace_twice(points) -> Rational:
    m = len(points)
    return sum((points[i].cross(points[(i + 1) % m]) for i in range(m)), Fraction(0))


def make_polygon(points: Iterable[PointLike]) -> SymPolygon:
    """Validate and canonicalize a vertex list into a :class:`SymPolygon`.

    Clockwise input is repaired by reversal.  Raises :class:`TooFewVertices`,
    :class:`NotConvex` (which covers collinear triples) or
    :class:`NotCentrallySymmetric`.
    """
    pts = [as_point(p) for p in points]
    if len(pts) < 4:
        raise TooFewVertices(f"need at least 4 vertices, got {len(pts)}")
    if len(pts) % 2 != 0:
        raise NotCentrallySymmetric(f"odd vertex count {len(pts)} cannot pair antipodally")

    m = len(pts)
    n = m // 2
    # symmetry first: it survives reversal, and lets the orientation and
    # convexity scans cover only half the cycle
    for i in range(n):
        if pts[i + n] != -pts[i]:
            raise NotCentrallySymmetric(f"vertex {pts[i]} has no antipode at position {i + n}")

    if sum((pts[i].cross(pts[i + 1]) for i in range(n)), Fraction(0)) < 0:
        pts.reverse()

    for i in range(n):
        a, b, c = pts[i], pts[i + 1], pts[(i + 2) % m]
        if (b - a).cross(c - b) <= 0:
            raise NotConvex(f"vertices {a}, {b}, {c} are not a strict left turn")

    return SymPolygon(_canonical_rotation(pts))


# ---------------------------------------------------------------------------
# Operations
# ---------------------------------------------------------------------------

@lru_cache(maxsize=65536)
def area(P: SymPolygon) -> Rational:
    """Exact shoelace area.

    Central symmetry pairs the shoelace terms, so summing the first half and
    leaving out the factor 1/2 gives the same value with half the work.
    """
    v = P.vertices
    return sum((v[i].cross(v[i + 1]) for i in range(P.n)), Fraction(0))


def edge_line(P: SymPolygon, s: int) -> HalfPlane:
    """The half-plane <x,w> <= 1 whose boundary carries edge s.

    ``w`` is the vertex of the polar body corresponding to edge s: the unique
    solution of <p,w> = <q,w> = 1 for the edge's endpoints p, q.
    """
    p, q = P.edge(s)
    det = p.cross(q)  # positive: origin is interior and the order is ccw
    return HalfPlane(Point((q.y - p.y) / det, (p.x - q.x) / det))


@lru_cache(maxsize=16384)
def _dual_raw(P: SymPolygon) -> tuple:
    """Dual vertex tuple, one per edge, in the edge order of P (ccw), together
    with the rotation offset used by the canonical form.

    Edge s + n is the antipode of edge s, so only half the linear systems are
    solved."""
    half = [edge_line(P, s).w for s in range(P.n)]
    raw = half + [-w for w in half]
    offset = min(range(len(raw)), key=lambda i: raw[i].key())
    return tuple(raw), offset


@lru_cache(maxsize=16384)
def polar_dual(P: SymPolygon) -> SymPolygon:
    """The polar body {x : <x,a> <= 1 for all a in P}, again a SymPolygon.

    Each edge of P contributes one dual vertex, so the dual has the same
    number of vertices as P.
    """
    raw, _ = _dual_raw(P)
    return make_polygon(raw)


def dual_vertex_index(P: SymPolygon, s: int) -> int:
    """Index in ``polar_dual(P)`` of the dual vertex arising from edge s."""
    _, offset = _dual_raw(P)
    return (s - offset) % len(P.vertices)


def dual_edge_index(P: SymPolygon, x: int) -> int:
    """Index of the edge of ``polar_dual(P)`` carried by the line <v_x, .> = 1."""
    d = polar_dual(P)
    v = P.vertex(x)
    for s in range(len(d.vertices)):
        p, q = d.edge(s)
        if p.dot(v) == 1 and q.dot(v) == 1:
            return s
    raise GeometryError(f"no dual edge found for vertex {v}")  # pragma: no cover


@lru_cache(maxsize=65536)
def mahler_volume(P: SymPolygon) -> Rational:
    """area(P) * area(polar_dual(P)), exact and invariant under linear maps."""
    return area(P) * area(polar_dual(P))


def apply_linear(P: SymPolygon, T: LinearMap) -> SymPolygon:
    """Image polygon T(P), revalidated (orientation is repaired if det < 0)."""
    return make_polygon([T(v) for v in P.vertices])


def index_shift(i: int, k: int, n: int) -> int:
    """Cyclic index arithmetic modulo 2n; vertex i + n is the antipode of i."""
    return (i + k) % (2 * n)
