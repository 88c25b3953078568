"""Deleting edge or vertex pairs while strictly decreasing the Mahler volume.

The descent repeatedly removes an antipodal pair of edges (or, via duality, of
vertices) chosen by an averaging comparison, until a parallelogram remains.
Because any centrally symmetric quadrilateral is a linear image of the square,
the final Mahler volume is exactly 8, which certifies M(P) >= 8 for the input.

Everything here is exact.  The normalization that makes a chosen edge
horizontal uses a rational linear map rather than a rotation, which changes
nothing: all the quantities compared are ratios of areas or of vertical
distances, invariant under the subsequent shear and under scaling.
"""

from __future__ import annotations

from dataclasses import dataclass
from fractions import Fraction
from math import gcd

from .geometry import (
    GeometryError,
    LinearMap,
    Point,
    Rational,
    SymPolygon,
    area,
    dual_vertex_index,
    edge_line,
    line_intersection,
    make_polygon,
    mahler_volume,
    polar_dual,
)
from .parallelograms import (
    edge_parallelogram_area,
    vertex_parallelogram_area,
)


class TooFewSides(GeometryError):
    """Operation requires n >= 3 but the polygon is a parallelogram."""


class InvariantViolation(RuntimeError):
    """An exact identity that must hold has failed; this falsifies the theorem
    the package implements and should be unreachable."""


class NoQualifyingEdge(InvariantViolation):
    """The averaging argument guarantees a qualifying edge; none was found."""


def _require_sides(P: SymPolygon, op: str) -> None:
    if P.n < 3:
        raise TooFewSides(f"{op} needs n >= 3, got n = {P.n}")


# ---------------------------------------------------------------------------
# Normalization
# ---------------------------------------------------------------------------

@dataclass(frozen=True)
class NormalizedFrame:
    """A polygon mapped so a chosen edge is horizontal on the lower boundary.

    In the frame, the lines through the edge's two neighbours meet at a point
    z on the vertical axis, strictly below the edge; the interior lies above.
    ``map`` sends the original polygon to ``polygon`` and ``edge`` is the
    index of the chosen edge after canonicalization.
    """

    map: LinearMap
    polygon: SymPolygon
    edge: int


def _locate_edge(P: SymPolygon, p: Point, q: Point) -> int:
    m = len(P.vertices)
    for i in range(m):
        if P.vertices[i] == p and P.vertices[(i + 1) % m] == q:
            return i
    raise GeometryError("edge not found after transformation")  # pragma: no cover


def normalize_for_edge(P: SymPolygon, s: int) -> NormalizedFrame:
    """Map P by an invertible rational map into the normalized frame for edge s.

    Composition: first the map (x,y) -> (dx*x + dy*y, -dy*x + dx*y) built from
    the reduced edge direction d, which makes the edge horizontal (orientation
    then puts the interior above it); second a shear fixing horizontals that
    moves the neighbour lines' intersection onto the vertical axis.
    """
    _require_sides(P, "normalize_for_edge")
    p, q = P.edge(s)
    d = q - p
    # primitive integer direction, so simple inputs get simple maps
    ix = d.x.numerator * d.y.denominator
    iy = d.y.numerator * d.x.denominator
    g = gcd(ix, iy)
    dx, dy = Fraction(ix, g), Fraction(iy, g)
    rot = LinearMap(dx, dy, -dy, dx)

    rp, rq = rot(p), rot(q)
    assert rp.y == rq.y and rp.y < 0, "edge must land horizontal below the origin"

    w_prev = edge_line(P, s - 1)
    w_next = edge_line(P, s + 1)
    z = rot(line_intersection(w_prev, w_next))
    assert z.y != 0, "neighbour apex cannot be at the origin's height"
    shear = LinearMap(1, -z.x / z.y, 0, 1)

    T = shear.compose(rot)
    image = make_polygon([T(v) for v in P.vertices])
    edge = _locate_edge(image, T(p), T(q))
    return NormalizedFrame(T, image, edge)


# ---------------------------------------------------------------------------
# Vertical-distance data
# ---------------------------------------------------------------------------

@dataclass(frozen=True)
class VerticalDistances:
    """Vertical distances tying an edge to the dual vertices near its own.

    For a horizontal edge s below the origin and a neighbouring edge s', with
    z' the point where the line through s' crosses the vertical axis:

        alpha     from z' to the line of s
        edge_dist from the origin to the line of s
        beta      from the dual vertex of s to the dual vertex of s'
        gamma     from the dual vertex of s' to the origin

    These always satisfy alpha * gamma == beta * edge_dist exactly (the
    similar-triangles identity, stated multiplicatively so the degenerate
    alpha = beta = 0 case needs no special handling).
    """

    alpha: Rational
    edge_dist: Rational
    beta: Rational
    gamma: Rational

    def __post_init__(self):
        if self.alpha * self.gamma != self.beta * self.edge_dist:
            raise InvariantViolation(
                f"alpha*gamma != beta*edge_dist: {self.alpha}*{self.gamma} "
                f"vs {self.beta}*{self.edge_dist}"
            )

    @property
    def ratio(self) -> Rational:
        """beta / gamma, the fractional area gained by deleting the edge pair."""
        return self.beta / self.gamma


def vertical_distances(frame: NormalizedFrame, neighbor: str) -> VerticalDistances:
    """Measure the four vertical distances at the frame's edge.

    ``neighbor`` selects the adjacent edge: "anticlockwise" for the next edge
    in ccw order, "clockwise" for the previous one.  Only horizontality of the
    edge is used, so the identity can also be checked on hand-built frames; in
    a frame produced by :func:`normalize_for_edge` both neighbours give the
    same distances.
    """
    P, s = frame.polygon, frame.edge
    p, q = P.edge(s)
    assert p.y == q.y and p.y < 0, "frame edge must be horizontal below the origin"
    y_edge = p.y
    edge_dist = -y_edge

    if neighbor == "anticlockwise":
        w_nb = edge_line(P, s + 1).w
    elif neighbor == "clockwise":
        w_nb = edge_line(P, s - 1).w
    else:
        raise ValueError(f"neighbor must be 'clockwise' or 'anticlockwise', got {neighbor!r}")

    if w_nb.y == 0:
        raise GeometryError("neighbour line is vertical and never meets the axis")
    z_y = 1 / w_nb.y  # the neighbour line crosses the axis at (0, 1/w_y)
    v_dual_y = 1 / y_edge  # dual vertex of a horizontal edge sits on the axis

    return VerticalDistances(
        alpha=abs(y_edge - z_y),
        edge_dist=edge_dist,
        beta=abs(v_dual_y - w_nb.y),
        gamma=abs(w_nb.y),
    )


# ---------------------------------------------------------------------------
# Deletions
# ---------------------------------------------------------------------------

def remove_edge_pair(P: SymPolygon, s: int) -> SymPolygon:
    """Delete the edge pair +-s, extending the neighbouring edges until they
    meet at a new antipodal vertex pair +-z.  The result has 2(n-1) vertices
    and strictly larger area."""
    _require_sides(P, "remove_edge_pair")
    n, m = P.n, 2 * P.n
    w_prev = edge_line(P, s - 1)
    w_next = edge_line(P, s + 1)
    z = line_intersection(w_prev, w_next)

    out = [z]
    out.extend(P.vertex(s + 2 + k) for k in range(n - 2))
    out.append(-z)
    out.extend(P.vertex(s + n + 2 + k) for k in range(n - 2))
    assert len(out) == m - 2
    return make_polygon(out)


def remove_vertex_pair(P: SymPolygon, x: int) -> SymPolygon:
    """Delete the vertex pair +-x; the hull of the rest, with 2(n-1) vertices.

    Equals the polar dual of removing the corresponding edge pair from the
    polar dual of P.
    """
    _require_sides(P, "remove_vertex_pair")
    m = 2 * P.n
    out = [P.vertices[i] for i in range(m) if i != x % m and i != (x + P.n) % m]
    return make_polygon(out)


# ---------------------------------------------------------------------------
# The deletion test on a single edge
# ---------------------------------------------------------------------------

@dataclass(frozen=True)
class EdgeRemovalReport:
    """All exact quantities involved in deleting one edge pair.

    ``lhs <= rhs`` is the qualifying test: the type-1 area fraction of the
    edge in the polygon against the type-2 area fraction of its dual vertex
    in the dual.  The two area-update identities and the expansion of the new
    Mahler volume hold unconditionally; the test only decides the sign of the
    middle term of the expansion.
    """

    lhs: Rational
    rhs: Rational
    m_before: Rational
    m_after: Rational
    primal_area_identity: bool
    dual_area_identity: bool
    expansion_identity: bool
    cross_term_negative: bool

    @property
    def qualifies(self) -> bool:
        return self.lhs <= self.rhs

    @property
    def gap(self) -> Rational:
        return self.rhs - self.lhs

    @property
    def all_identities_hold(self) -> bool:
        return (
            self.primal_area_identity
            and self.dual_area_identity
            and self.expansion_identity
            and self.cross_term_negative
        )


def analyze_edge_removal(P: SymPolygon, s: int) -> EdgeRemovalReport:
    """Work the deletion of edge pair +-s in the normalized frame.

    Verifies, with exact rationals and r = beta/gamma from
    :func:`vertical_distances`:

        area(A_s)        == area(A)  + (r/2) * area(P1(s))
        area(dual(A_s))  == area(A°) - (r/2) * area(P2(v°(s)))
        M(A_s) == M(A) + (r/2) * (area(A°) P1 - area(A) P2) - (r/2)^2 P1 P2

    and that the last term is strictly negative.  Whenever lhs <= rhs the
    deletion therefore strictly decreases the Mahler volume, which is asserted.
    """
    _require_sides(P, "analyze_edge_removal")
    frame = normalize_for_edge(P, s)
    B, t = frame.polygon, frame.edge
    D = polar_dual(B)

    area_B, area_D = area(B), area(D)
    m_before = area_B * area_D
    p1 = edge_parallelogram_area(B, t)
    p2 = vertex_parallelogram_area(D, dual_vertex_index(B, t))
    lhs = p1 / area_B
    rhs = p2 / area_D

    dist = vertical_distances(frame, "anticlockwise")
    half_ratio = dist.ratio / 2

    B_s = remove_edge_pair(B, t)
    D_s = polar_dual(B_s)
    m_after = area(B_s) * area(D_s)

    primal_ok = area(B_s) == area_B + half_ratio * p1
    dual_ok = area(D_s) == area_D - half_ratio * p2
    expansion_ok = m_after == (
        m_before + half_ratio * (area_D * p1 - area_B * p2) - half_ratio**2 * p1 * p2
    )
    cross_negative = half_ratio**2 * p1 * p2 > 0

    if lhs <= rhs and not m_after < m_before:
        raise InvariantViolation(
            f"qualifying deletion did not decrease the Mahler volume: "
            f"{m_before} -> {m_after}"
        )
    return EdgeRemovalReport(
        lhs, rhs, m_before, m_after, primal_ok, dual_ok, expansion_ok, cross_negative
    )


# ---------------------------------------------------------------------------
# Move selection and descent
# ---------------------------------------------------------------------------

PRIMAL = "primal"
DUAL = "dual"


@dataclass(frozen=True)
class Move:
    """One volume-decreasing deletion: the edge pair ``edge`` of ``side``.

    A primal move deletes an edge pair of the polygon itself; a dual move
    deletes an edge pair of the polar body, i.e. a vertex pair of the polygon.
    ``gap`` is rhs - lhs of the qualifying test, never negative.
    """

    side: str
    edge: int
    gap: Rational


def _average_type1_fraction(B: SymPolygon) -> Rational:
    # antipodal edges contribute equal areas, so averaging half suffices
    total = sum((edge_parallelogram_area(B, s) for s in range(B.n)), Fraction(0))
    return total / (B.n * area(B))


def select_move(P: SymPolygon) -> Move:
    """Pick a deletion that is guaranteed to decrease the Mahler volume.

    The side (polygon or its dual) with the smaller average type-1 area
    fraction is searched; on that side at least one edge must pass the
    qualifying test, by averaging.  Among qualifying edges the one with the
    largest gap wins, ties broken by the smallest edge index.  Equal averages
    choose the primal side.
    """
    _require_sides(P, "select_move")
    D = polar_dual(P)
    side = PRIMAL if _average_type1_fraction(P) <= _average_type1_fraction(D) else DUAL
    B = P if side == PRIMAL else D
    Bd = D if side == PRIMAL else polar_dual(D)

    area_B, area_Bd = area(B), area(Bd)
    best: Move | None = None
    # the test repeats with period n (deleting +-(s+n) is deleting +-s), so
    # the smallest-index tie break always lands in the first half
    for s in range(B.n):
        lhs = edge_parallelogram_area(B, s) / area_B
        rhs = vertex_parallelogram_area(Bd, dual_vertex_index(B, s)) / area_Bd
        if lhs <= rhs:
            gap = rhs - lhs
            if best is None or gap > best.gap:
                best = Move(side, s, gap)
    if best is None:
        raise NoQualifyingEdge(
            f"no qualifying edge on the {side} side of a {2 * P.n}-gon"
        )
    return best


@dataclass(frozen=True)
class DescentStep:
    polygon: SymPolygon
    dual: SymPolygon
    mahler: Rational
    move: Move


@dataclass(frozen=True)
class DescentTrace:
    """The executed deletion sequence, ending at a parallelogram with M = 8."""

    steps: tuple
    final: SymPolygon
    final_mahler: Rational


def apply_move(P: SymPolygon, move: Move) -> SymPolygon:
    """Execute a move on the primal polygon.

    A dual move is an edge deletion on the polar body; on the primal side that
    is the deletion of the vertex pair whose vertex generates the chosen dual
    edge's line.
    """
    if move.side == PRIMAL:
        return remove_edge_pair(P, move.edge)
    D = polar_dual(P)
    v = edge_line(D, move.edge).w  # a vertex of P, by bipolarity
    return remove_vertex_pair(P, P.vertices.index(v))


def descend(P: SymPolygon) -> DescentTrace:
    """Delete pairs until a parallelogram remains, recording every step.

    The Mahler volume strictly decreases along the trace and the final value
    is exactly 8, so the input's volume is certified to be at least 8.
    """
    steps = []
    current = P
    m_current = mahler_volume(current)
    while current.n > 2:
        move = select_move(current)
        steps.append(DescentStep(current, polar_dual(current), m_current, move))
        current = apply_move(current, move)
        m_next = mahler_volume(current)
        if not m_next < m_current:
            raise InvariantViolation(
                f"Mahler volume failed to decrease: {m_current} -> {m_next}"
            )
        m_current = m_next

    if len(current.vertices) != 4 or m_current != 8:
        raise InvariantViolation(
            f"descent ended at a {len(current.vertices)}-gon with M = {m_current}"
        )
    return DescentTrace(tuple(steps), current, m_current)
