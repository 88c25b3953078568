"""Polar duality and the Mahler volume, exactly.

Builds the basic cast of polygons, takes their polar bodies, and shows the
two facts everything else leans on: duality is an exact involution, and the
Mahler volume ignores invertible linear maps.
"""

from fractions import Fraction

from mahler2d import (
    LinearMap,
    apply_linear,
    area,
    make_polygon,
    mahler_volume,
    named_polygon,
    polar_dual,
)


def show(name, P):
    D = polar_dual(P)
    print(f"{name}:")
    print(f"  vertices   {[(str(v.x), str(v.y)) for v in P.vertices]}")
    print(f"  area       {area(P)}")
    print(f"  dual area  {area(D)}")
    print(f"  mahler     {mahler_volume(P)} = {float(mahler_volume(P)):.6f}")
    print()


print("=" * 70)
print("the square and its dual diamond sit at the conjectured minimum, M = 8")
print("=" * 70)
square = named_polygon("square")
show("square [-1,1]^2", square)
show("diamond (its polar body)", polar_dual(square))

print("=" * 70)
print("hexagons: two linear images of the same body, both with M = 9")
print("=" * 70)
show("hex6", named_polygon("hex6"))
show("hex6b", named_polygon("hex6b"))

print("=" * 70)
print("duality is an involution: dual(dual(P)) == P, exactly")
print("=" * 70)
for name in ("square", "hex6", "hex6b", "oct8"):
    P = named_polygon(name)
    print(f"  {name:8s} bipolar: {polar_dual(polar_dual(P)) == P}")
print()

print("=" * 70)
print("the Mahler volume is a linear invariant")
print("=" * 70)
P = named_polygon("oct8")
for T in (
    LinearMap(2, 0, 0, 1),
    LinearMap(1, 1, 0, 1),
    LinearMap(3, 1, 1, 2),
    LinearMap(Fraction(1, 3), 0, Fraction(5, 7), 4),
):
    image = apply_linear(P, T)
    print(
        f"  det {str(T.det):>6}: area {str(area(image)):>8}  "
        f"dual area {str(area(polar_dual(image))):>10}  "
        f"M = {mahler_volume(image)}"
    )
print()
print(f"M(oct8) stays {mahler_volume(P)} = {float(mahler_volume(P)):.6f}, "
      f"below the disc's pi^2 = 9.8696... and above the square's 8")
