"""Anatomy of one edge deletion, in exact arithmetic.

Deleting an antipodal edge pair grows the polygon (the neighbouring edges
extend to a new vertex pair) and shrinks the dual (the matching dual vertex
pair disappears).  In the normalized frame both changes are governed by one
rational ratio r = beta/gamma of vertical distances:

    area grows   by (r/2) * (type-1 area of the edge)
    dual shrinks by (r/2) * (type-2 area at the dual vertex)

and the product - the Mahler volume - picks up a strictly negative square
term, so the volume drops whenever the type-1 fraction does not exceed the
type-2 fraction.
"""

from mahler2d import (
    analyze_edge_removal,
    area,
    mahler_volume,
    named_polygon,
    normalize_for_edge,
    polar_dual,
    remove_edge_pair,
    vertical_distances,
)

P = named_polygon("hex6b")
top = next(i for i in range(6) if P.edge(i)[0].y == 2 and P.edge(i)[1].y == 2)

print(f"polygon: hex6b, area {area(P)}, dual area {area(polar_dual(P))}, "
      f"M = {mahler_volume(P)}")
print(f"deleting the top edge pair (edge index {top})")
print()

frame = normalize_for_edge(P, top)
print(f"normalizing map {frame.map} puts the edge horizontal at the bottom")
d = vertical_distances(frame, "anticlockwise")
print(f"vertical distances: alpha={d.alpha} edge_dist={d.edge_dist} "
      f"beta={d.beta} gamma={d.gamma}")
print(f"similar-triangles identity: {d.alpha} * {d.gamma} == {d.beta} * {d.edge_dist}"
      f"  ->  {d.alpha * d.gamma == d.beta * d.edge_dist}")
print(f"ratio r = beta/gamma = {d.ratio}")
print()

after = remove_edge_pair(P, top)
print(f"after deletion: {[(str(v.x), str(v.y)) for v in after.vertices]}")
print(f"  area {area(P)} -> {area(after)}   (grew by (r/2) * 8 = {d.ratio / 2 * 8})")
print(f"  dual area {area(polar_dual(P))} -> {area(polar_dual(after))}")
print(f"  M {mahler_volume(P)} -> {mahler_volume(after)}")
print()

report = analyze_edge_removal(P, top)
print("full report:")
print(f"  type-1 fraction (lhs)   {report.lhs}")
print(f"  type-2 fraction (rhs)   {report.rhs}")
print(f"  qualifies (lhs <= rhs)  {report.qualifies}")
print(f"  area updates exact      {report.primal_area_identity} / {report.dual_area_identity}")
print(f"  volume expansion exact  {report.expansion_identity}")
print(f"  negative square term    {report.cross_term_negative}")
print(f"  M: {report.m_before} -> {report.m_after}")
