"""Deterministic generation of centrally symmetric convex polygons.

Every centrally symmetric convex polygon is a zonogon, the Minkowski sum of
finitely many segments, so building one from n generator segments gives the
symmetry, the convexity and the exact vertex count 2n by construction.
"""

from __future__ import annotations

from dataclasses import dataclass
from functools import cmp_to_key
from math import gcd

from .geometry import GeometryError, Point, SymPolygon, make_polygon


class UnknownName(GeometryError):
    """Requested a named polygon that does not exist."""


MASK64 = (1 << 64) - 1


class SplitMix64:
    """Minimal 64-bit mixing generator, fixed so suites reproduce bit-exactly.

    state += 0x9E3779B97F4A7C15
    z = state
    z = (z ^ (z >> 30)) * 0xBF58476D1CE4E5B9
    z = (z ^ (z >> 27)) * 0x94D049BB133111EB
    return z ^ (z >> 31)

    (all arithmetic modulo 2^64).
    """

    def __init__(self, seed: int):
        self.state = seed & MASK64

    def next_u64(self) -> int:
        self.state = (self.state + 0x9E3779B97F4A7C15) & MASK64
        z = self.state
        z = ((z ^ (z >> 30)) * 0xBF58476D1CE4E5B9) & MASK64
        z = ((z ^ (z >> 27)) * 0x94D049BB133111EB) & MASK64
        return z ^ (z >> 31)

    def below(self, bound: int) -> int:
        """Uniform integer in [0, bound) by rejection on the top range."""
        limit = MASK64 - (MASK64 + 1) % bound
        while True:
            u = self.next_u64()
            if u <= limit:
                return u % bound


@dataclass(frozen=True)
class GenSpec:
    """Parameters for :func:`random_zonogon`."""

    n: int
    seed: int
    coord_bound: int = 9

    def __post_init__(self):
        if self.n < 2:
            raise ValueError(f"n must be at least 2, got {self.n}")
        if self.coord_bound < 1:
            raise ValueError("coord_bound must be positive")


def _angle_cmp(a: Point, b: Point) -> int:
    c = a.cross(b)
    return -1 if c > 0 else (1 if c < 0 else 0)


def zonogon_from_generators(generators: list) -> SymPolygon:
    """The zonogon of the given segment generators, as an explicit polygon.

    Generators must be nonzero with pairwise distinct directions in the upper
    half-plane (y > 0, or y = 0 with x > 0).  They are sorted by angle; the
    vertices are the partial sums started at minus half the total, and their
    antipodes.
    """
    gens = [g if isinstance(g, Point) else Point(*g) for g in generators]
    for g in gens:
        if not (g.y > 0 or (g.y == 0 and g.x > 0)):
            raise GeometryError(f"generator {g} is not in the open upper half-plane")
    gens.sort(key=cmp_to_key(_angle_cmp))

    total = Point(0, 0)
    for g in gens:
        total = total + g
    half = Point(total.x / 2, total.y / 2)

    verts = []
    acc = -half
    for g in gens:
        verts.append(acc)
        acc = acc + g
    verts.extend(-v for v in verts[: len(gens)])
    return make_polygon(verts)


def random_zonogon(spec: GenSpec) -> SymPolygon:
    """Draw a zonogon with exactly 2n integer vertices, deterministic in seed.

    Generator vectors are sampled with coordinates up to ``coord_bound`` and
    rejection-sampled until their directions are pairwise distinct, then
    doubled so the vertex coordinates stay integral.
    """
    rng = SplitMix64(spec.seed)
    B = spec.coord_bound
    gens: list[Point] = []
    seen: set[tuple[int, int]] = set()
    while len(gens) < spec.n:
        x = rng.below(2 * B + 1) - B
        y = rng.below(B + 1)
        if y == 0 and x <= 0:
            continue
        g = gcd(x, y)
        direction = (x // g, y // g)
        if direction in seen:
            continue
        seen.add(direction)
        gens.append(Point(2 * x, 2 * y))
    return zonogon_from_generators(gens)


_NAMED = {
    "square": [(1, 1), (-1, 1), (-1, -1), (1, -1)],
    "diamond": [(1, 0), (0, 1), (-1, 0), (0, -1)],
    "hex6": [(1, 0), (0, 1), (-1, 1), (-1, 0), (0, -1), (1, -1)],
    "hex6b": [(2, 0), (1, 2), (-1, 2), (-2, 0), (-1, -2), (1, -2)],
    "oct8": [(1, 3), (-1, 3), (-3, 1), (-3, -1), (-1, -3), (1, -3), (3, -1), (3, 1)],
}


def named_polygon(name: str) -> SymPolygon:
    """Fixed reference polygons: the square and its dual diamond, two
    hexagons (Mahler volume 9), and a zonogonal octagon."""
    try:
        return make_polygon(_NAMED[name])
    except KeyError:
        raise UnknownName(f"unknown polygon {name!r}; choose from {sorted(_NAMED)}") from None


def named_polygon_names() -> list[str]:
    return sorted(_NAMED)
