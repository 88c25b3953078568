"""Brute-force reference implementations used to cross-check the fast paths.

Deliberately slow and simple: the polar dual by pairwise half-plane
intersection, the area by a triangle fan and by Monte Carlo, and an
exhaustive enumeration of all volume-decreasing deletion candidates.
"""

from __future__ import annotations

from dataclasses import dataclass
from fractions import Fraction
from functools import cmp_to_key

import numpy as np

from .geometry import (
    HalfPlane,
    Point,
    SymPolygon,
    area,
    line_intersection,
    make_polygon,
    polar_dual,
)
from .geometry import dual_vertex_index
from .parallelograms import edge_parallelogram_area, vertex_parallelogram_area


def _angular_cmp(p: Point, q: Point) -> int:
    """Order points by angle around the origin, exactly."""
    def half(v: Point) -> int:
        # 0 for the upper half-plane (incl. positive x-axis), 1 for the lower
        return 0 if (v.y > 0 or (v.y == 0 and v.x > 0)) else 1

    hp, hq = half(p), half(q)
    if hp != hq:
        return -1 if hp < hq else 1
    c = p.cross(q)
    if c > 0:
        return -1
    if c < 0:
        return 1
    return 0


def dual_by_halfplane_intersection(P: SymPolygon) -> SymPolygon:
    """Polar dual via the constraints <x,v> <= 1 over all vertices v of P.

    Enumerates every pairwise intersection of the boundary lines, keeps the
    feasible ones, orders them by angle around the origin, and validates.
    """
    constraints = [HalfPlane(v) for v in P.vertices]
    candidates: set[Point] = set()
    for i in range(len(constraints)):
        for j in range(i + 1, len(constraints)):
            if constraints[i].w.cross(constraints[j].w) == 0:
                continue
            z = line_intersection(constraints[i], constraints[j])
            if all(h.contains(z) for h in constraints):
                candidates.add(z)
    ordered = sorted(candidates, key=cmp_to_key(_angular_cmp))
    return make_polygon(ordered)


def triangle_area(a: Point, b: Point, c: Point) -> Fraction:
    """Unsigned area of the triangle [a, b, c]."""
    return abs((b - a).cross(c - a)) / 2


def area_by_fan(P: SymPolygon) -> Fraction:
    """Area as the sum of the fan triangles [0, v_i, v_{i+1}]."""
    m = len(P.vertices)
    origin = Point(0, 0)
    return sum(
        (triangle_area(origin, P.vertices[i], P.vertices[(i + 1) % m]) for i in range(m)),
        Fraction(0),
    )


def area_by_montecarlo(P: SymPolygon, samples: int, seed: int) -> tuple[float, float]:
    """Rejection-sampling area estimate; returns (estimate, stderr)."""
    if samples < 10_000:
        raise ValueError("need at least 10^4 samples for a meaningful estimate")
    verts = np.array([[float(v.x), float(v.y)] for v in P.vertices])
    lo, hi = verts.min(axis=0), verts.max(axis=0)
    box = float(np.prod(hi - lo))

    rng = np.random.default_rng(seed)
    pts = rng.uniform(lo, hi, size=(samples, 2))
    inside = np.ones(samples, dtype=bool)
    m = len(verts)
    for i in range(m):
        e = verts[(i + 1) % m] - verts[i]
        rel = pts - verts[i]
        inside &= e[0] * rel[:, 1] - e[1] * rel[:, 0] >= 0
    p = inside.mean()
    estimate = box * p
    stderr = box * float(np.sqrt(p * (1 - p) / samples))
    return estimate, stderr


# ---------------------------------------------------------------------------
# Exhaustive enumeration of deletion moves
# ---------------------------------------------------------------------------

@dataclass(frozen=True)
class MoveCandidate:
    side: str  # "primal" or "dual"
    edge: int
    lhs: Fraction
    rhs: Fraction
    mahler_after: Fraction | None  # executed only for qualifying candidates

    @property
    def gap(self) -> Fraction:
        return self.rhs - self.lhs

    @property
    def qualifies(self) -> bool:
        return self.lhs <= self.rhs


@dataclass(frozen=True)
class MoveReport:
    candidates: tuple
    avg_primal: Fraction
    avg_dual: Fraction
    mahler_before: Fraction

    @property
    def chosen_side(self) -> str:
        return "primal" if self.avg_primal <= self.avg_dual else "dual"

    def qualifying(self, side: str | None = None):
        return [
            c for c in self.candidates
            if c.qualifies and (side is None or c.side == side)
        ]

    @property
    def all_qualifying_decrease(self) -> bool:
        return all(c.mahler_after < self.mahler_before for c in self.qualifying())


def exhaustive_move_check(P: SymPolygon) -> MoveReport:
    """Evaluate the deletion test on every edge of P and of its dual.

    For each edge s of a side B the test compares area(P1(s))/area(B) against
    the area ratio of the opposite-type parallelogram at the dual vertex of s.
    Every qualifying candidate is executed and its Mahler volume recorded, so
    the report can certify that qualifying deletions strictly decrease the
    volume.  Returns an empty report for parallelograms (n = 2).
    """
    from .reduction import remove_edge_pair  # local import to avoid a cycle

    m_before = area(P) * area(polar_dual(P))
    if P.n < 3:
        return MoveReport((), Fraction(0), Fraction(0), m_before)

    sides = {"primal": P, "dual": polar_dual(P)}
    averages = {}
    candidates = []
    for name, B in sides.items():
        Bd = polar_dual(B)
        area_B, area_Bd = area(B), area(Bd)
        total = Fraction(0)
        half = []
        for s in range(B.n):
            lhs = edge_parallelogram_area(B, s) / area_B
            total += lhs
            rhs = vertex_parallelogram_area(Bd, dual_vertex_index(B, s)) / area_Bd
            m_after = None
            if lhs <= rhs:
                B_s = remove_edge_pair(B, s)
                m_after = area(B_s) * area(polar_dual(B_s))
            half.append(MoveCandidate(name, s, lhs, rhs, m_after))
        candidates.extend(half)
        # deleting edge pair +-(s+n) is the same deletion as +-s, so the
        # antipodal half of the report is a literal copy
        candidates.extend(
            MoveCandidate(name, c.edge + B.n, c.lhs, c.rhs, c.mahler_after)
            for c in half
        )
        averages[name] = total / B.n

    return MoveReport(tuple(candidates), averages["primal"], averages["dual"], m_before)
