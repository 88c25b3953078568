"""Geometry core: construction, areas, duals, linear maps."""

from fractions import Fraction

import pytest
from hypothesis import given, settings
from hypothesis import strategies as st

from mahler2d import (
    GenSpec,
    LinearMap,
    NotCentrallySymmetric,
    NotConvex,
    Point,
    SingularMap,
    SymPolygon,
    TooFewVertices,
    apply_linear,
    area,
    dual_edge_index,
    dual_vertex_index,
    edge_line,
    index_shift,
    make_polygon,
    mahler_volume,
    named_polygon,
    polar_dual,
    random_zonogon,
)
from mahler2d.oracle import area_by_fan, dual_by_halfplane_intersection

SQUARE = named_polygon("square")
HEX6 = named_polygon("hex6")
HEX6B = named_polygon("hex6b")
OCT8 = named_polygon("oct8")


def small_zonogon(seed: int, n: int) -> SymPolygon:
    return random_zonogon(GenSpec(n, seed=seed, coord_bound=7))


# ---------------------------------------------------------------------------
# make_polygon
# ---------------------------------------------------------------------------

def test_square_construction_and_canonical_rotation():
    P = make_polygon([(1, 1), (-1, 1), (-1, -1), (1, -1)])
    assert P.n == 2
    assert P.vertices[0] == Point(-1, -1)  # lexicographic minimum first
    assert P == SQUARE


def test_hexagon_construction_is_strictly_convex():
    P = make_polygon([(1, 0), (0, 1), (-1, 1), (-1, 0), (0, -1), (1, -1)])
    assert P.n == 3
    # independent cross-product scan over the canonical cycle
    v = P.vertices
    m = len(v)
    for i in range(m):
        a, b, c = v[i], v[(i + 1) % m], v[(i + 2) % m]
        assert (b - a).cross(c - b) > 0


def test_missing_antipode_is_rejected():
    with pytest.raises(NotCentrallySymmetric):
        make_polygon([(1, 0), (0, 1), (-1, 0), (0, -1), (2, 2)])


def test_even_count_without_pairing_is_rejected():
    with pytest.raises(NotCentrallySymmetric):
        make_polygon([(1, 0), (0, 1), (-1, 0), (0, -2)])


def test_too_few_vertices():
    with pytest.raises(TooFewVertices):
        make_polygon([(1, 0), (-1, 0)])


def test_collinear_triple_is_rejected():
    with pytest.raises(NotConvex):
        make_polygon([(2, 0), (0, 2), (-1, 1), (-2, 0), (0, -2), (1, -1)])


def test_clockwise_input_is_repaired():
    cw = [(1, -1), (-1, -1), (-1, 1), (1, 1)]
    assert make_polygon(cw) == SQUARE


# ---------------------------------------------------------------------------
# area
# ---------------------------------------------------------------------------

@pytest.mark.parametrize(
    "P,expected",
    [(SQUARE, 4), (HEX6, 3), (HEX6B, 12), (OCT8, 28)],
)
def test_areas(P, expected):
    assert area(P) == expected
    assert area_by_fan(P) == expected


# ---------------------------------------------------------------------------
# polar_dual
# ---------------------------------------------------------------------------

def test_dual_of_square_is_diamond():
    assert polar_dual(SQUARE) == named_polygon("diamond")
    assert polar_dual(named_polygon("diamond")) == SQUARE


def test_dual_of_hex6():
    expected = make_polygon([(1, 1), (0, 1), (-1, 0), (-1, -1), (0, -1), (1, 0)])
    assert polar_dual(HEX6) == expected
    assert dual_by_halfplane_intersection(HEX6) == expected


def test_dual_of_hex6b():
    expected = make_polygon(
        [
            (Fraction(1, 2), Fraction(1, 4)),
            (0, Fraction(1, 2)),
            (Fraction(-1, 2), Fraction(1, 4)),
            (Fraction(-1, 2), Fraction(-1, 4)),
            (0, Fraction(-1, 2)),
            (Fraction(1, 2), Fraction(-1, 4)),
        ]
    )
    assert polar_dual(HEX6B) == expected
    assert dual_by_halfplane_intersection(HEX6B) == expected


def test_dual_vertex_and_edge_indices_are_inverse_views():
    for P in (SQUARE, HEX6, HEX6B, OCT8):
        D = polar_dual(P)
        for s in range(len(P.vertices)):
            assert D.vertices[dual_vertex_index(P, s)] == edge_line(P, s).w
        for x in range(len(P.vertices)):
            p, q = D.edge(dual_edge_index(P, x))
            v = P.vertices[x]
            assert p.dot(v) == 1 and q.dot(v) == 1


# ---------------------------------------------------------------------------
# mahler_volume
# ---------------------------------------------------------------------------

@pytest.mark.parametrize(
    "P,expected",
    [(SQUARE, 8), (HEX6, 9), (HEX6B, 9), (OCT8, Fraction(28, 3))],
)
def test_mahler_volumes(P, expected):
    assert mahler_volume(P) == expected


# ---------------------------------------------------------------------------
# apply_linear
# ---------------------------------------------------------------------------

def test_identity_map():
    assert apply_linear(SQUARE, LinearMap.identity()) == SQUARE


def test_axis_stretch_keeps_mahler_volume():
    stretched = apply_linear(SQUARE, LinearMap(2, 0, 0, 1))
    assert stretched == make_polygon([(2, 1), (-2, 1), (-2, -1), (2, -1)])
    assert mahler_volume(stretched) == 8


def test_shear_keeps_mahler_volume():
    sheared = apply_linear(HEX6, LinearMap(1, 1, 0, 1))
    assert mahler_volume(sheared) == 9
    assert area(sheared) * area(dual_by_halfplane_intersection(sheared)) == 9


def test_orientation_reversing_map_is_repaired():
    reflected = apply_linear(HEX6B, LinearMap(-1, 0, 0, 1))
    assert area(reflected) == 12
    assert mahler_volume(reflected) == 9


def test_singular_map_rejected():
    with pytest.raises(SingularMap):
        LinearMap(1, 2, 2, 4)


# ---------------------------------------------------------------------------
# edge_line
# ---------------------------------------------------------------------------

def test_edge_line_square_top():
    s = next(
        i for i in range(4) if SQUARE.edge(i)[0].y == 1 and SQUARE.edge(i)[1].y == 1
    )
    assert edge_line(SQUARE, s).w == Point(0, 1)


@pytest.mark.parametrize(
    "edge_pts,expected",
    [
        (((1, 2), (-1, 2)), Point(0, Fraction(1, 2))),
        (((2, 0), (1, 2)), Point(Fraction(1, 2), Fraction(1, 4))),
    ],
)
def test_edge_line_hex6b(edge_pts, expected):
    s = next(
        i
        for i in range(6)
        if (HEX6B.edge(i)[0], HEX6B.edge(i)[1]) == tuple(Point(*p) for p in edge_pts)
    )
    w = edge_line(HEX6B, s).w
    assert w == expected


def test_edge_line_supports_whole_polygon():
    for P in (SQUARE, HEX6, HEX6B, OCT8):
        for s in range(len(P.vertices)):
            h = edge_line(P, s)
            p, q = P.edge(s)
            assert p.dot(h.w) == 1 and q.dot(h.w) == 1
            assert all(v.dot(h.w) <= 1 for v in P.vertices)


# ---------------------------------------------------------------------------
# index_shift
# ---------------------------------------------------------------------------

def test_index_shift_antipode():
    assert index_shift(0, 3, 3) == 3
    assert HEX6.vertices[3] == -HEX6.vertices[0]


def test_index_shift_wraparound():
    assert index_shift(5, 1, 3) == 0
    assert index_shift(0, -1, 3) == 5


# ---------------------------------------------------------------------------
# structural properties
# ---------------------------------------------------------------------------

@pytest.mark.parametrize("P", [SQUARE, HEX6, HEX6B, OCT8])
def test_bipolarity_named(P):
    assert polar_dual(polar_dual(P)) == P


@settings(max_examples=40, deadline=None)
@given(seed=st.integers(0, 2**32), n=st.integers(2, 8))
def test_bipolarity_random(seed, n):
    P = small_zonogon(seed, n)
    assert polar_dual(polar_dual(P)) == P


@settings(max_examples=25, deadline=None)
@given(
    seed=st.integers(0, 2**32),
    n=st.integers(2, 6),
    entries=st.tuples(*[st.integers(-5, 5)] * 4),
)
def test_mahler_invariance_random(seed, n, entries):
    a, b, c, d = entries
    if a * d - b * c == 0:
        return
    P = small_zonogon(seed, n)
    assert mahler_volume(apply_linear(P, LinearMap(a, b, c, d))) == mahler_volume(P)


def test_duality_reverses_containment():
    # diamond inside square, and any polygon inside its doubled copy
    diamond = named_polygon("diamond")
    assert SQUARE.contains_polygon(diamond)
    assert polar_dual(diamond).contains_polygon(polar_dual(SQUARE))
    for seed in range(5):
        P = small_zonogon(seed, 4)
        Q = apply_linear(P, LinearMap(2, 0, 0, 2))
        assert Q.contains_polygon(P)
        assert polar_dual(P).contains_polygon(polar_dual(Q))


def test_vertices_are_immutable_values():
    with pytest.raises(AttributeError):
        SQUARE.vertices = ()
    with pytest.raises(AttributeError):
        Point(1, 2).x = 3
