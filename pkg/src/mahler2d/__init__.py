"""Exact rational geometry for centrally symmetric convex polygons.

Polar duality, Mahler volume, inscribed-parallelogram comparisons, and a
descent by edge- or vertex-pair deletion that terminates at a parallelogram
with Mahler volume exactly 8, certifying the planar lower bound M >= 8.
"""

from .geometry import (
    GeometryError,
    HalfPlane,
    LinearMap,
    NotCentrallySymmetric,
    NotConvex,
    Point,
    Rational,
    SingularMap,
    SymPolygon,
    TooFewVertices,
    apply_linear,
    area,
    dual_edge_index,
    dual_vertex_index,
    edge_line,
    index_shift,
    line_intersection,
    make_polygon,
    mahler_volume,
    polar_dual,
)
from .parallelograms import (
    DegenerateParallelogram,
    HexagonCarving,
    Parallelogram,
    SumComparison,
    Triangle,
    compare_parallelogram_sums,
    edge_parallelogram,
    hexagon_carving,
    vertex_parallelogram,
)
from .reduction import (
    DescentStep,
    DescentTrace,
    EdgeRemovalReport,
    InvariantViolation,
    Move,
    NoQualifyingEdge,
    NormalizedFrame,
    TooFewSides,
    VerticalDistances,
    analyze_edge_removal,
    apply_move,
    descend,
    normalize_for_edge,
    remove_edge_pair,
    remove_vertex_pair,
    select_move,
    vertical_distances,
)
from .zonogen import (
    GenSpec,
    SplitMix64,
    UnknownName,
    named_polygon,
    random_zonogon,
    zonogon_from_generators,
)

__version__ = "0.1.0"

__all__ = [
    "GeometryError",
    "HalfPlane",
    "LinearMap",
    "NotCentrallySymmetric",
    "NotConvex",
    "Point",
    "Rational",
    "SingularMap",
    "SymPolygon",
    "TooFewVertices",
    "apply_linear",
    "area",
    "dual_edge_index",
    "dual_vertex_index",
    "edge_line",
    "index_shift",
    "line_intersection",
    "make_polygon",
    "mahler_volume",
    "polar_dual",
    "DegenerateParallelogram",
    "HexagonCarving",
    "Parallelogram",
    "SumComparison",
    "Triangle",
    "compare_parallelogram_sums",
    "edge_parallelogram",
    "hexagon_carving",
    "vertex_parallelogram",
    "DescentStep",
    "DescentTrace",
    "EdgeRemovalReport",
    "InvariantViolation",
    "Move",
    "NoQualifyingEdge",
    "NormalizedFrame",
    "TooFewSides",
    "VerticalDistances",
    "analyze_edge_removal",
    "apply_move",
    "descend",
    "normalize_for_edge",
    "remove_edge_pair",
    "remove_vertex_pair",
    "select_move",
    "vertical_distances",
    "GenSpec",
    "SplitMix64",
    "UnknownName",
    "named_polygon",
    "random_zonogon",
    "zonogon_from_generators",
]
