"""The two families of inscribed parallelograms and their totals.

Every edge spans a parallelogram with its antipodal edge (type 1); every
vertex induces one through the four neighbours of the antipodal pair
(type 2).  Summed over the polygon the first family never beats the second,
with equality exactly for hexagons.  The demo also shows the hexagon carving
that reduces the comparison to one triangle pair per vertex.
"""

from mahler2d import (
    compare_parallelogram_sums,
    edge_parallelogram,
    hexagon_carving,
    named_polygon,
    random_zonogon,
    vertex_parallelogram,
    GenSpec,
)

for name in ("hex6", "hex6b", "oct8"):
    P = named_polygon(name)
    cmp = compare_parallelogram_sums(P)
    print(f"{name}: sum(type-1) = {cmp.lhs}  {cmp.relation}  {cmp.rhs} = sum(type-2)")
print()

print("per-edge and per-vertex areas on the octagon:")
P = named_polygon("oct8")
for i in range(len(P.vertices)):
    e = edge_parallelogram(P, i).area
    v = vertex_parallelogram(P, i).area
    print(f"  index {i}: type-1 {str(e):>3}   type-2 {str(v):>3}")
print()

print("the carving at each vertex x of the octagon:")
print("  hexagon = type-1 + 2 triangles = type-2 + 2 triangles,")
print("  and the first triangle (shifted by one) strictly beats the second:")
for x in range(len(P.vertices)):
    carve = hexagon_carving(P, x)
    t1 = hexagon_carving(P, x - 1).t1.area
    t2 = carve.t2.area
    check1 = carve.hexagon_area == edge_parallelogram(P, x - 1).area + 2 * carve.t1.area
    check2 = carve.hexagon_area == vertex_parallelogram(P, x).area + 2 * carve.t2.area
    print(f"  x={x}: carvings exact: {check1 and check2}   "
          f"t1(x-1) = {t1} > {t2} = t2(x): {t1 > t2}")
print()

print("random zonogons, n = 3..8 (equality only ever shows up at n = 3):")
for n in range(3, 9):
    P = random_zonogon(GenSpec(n, seed=77))
    cmp = compare_parallelogram_sums(P)
    print(f"  n={n}: {cmp.lhs} {cmp.relation} {cmp.rhs}")
