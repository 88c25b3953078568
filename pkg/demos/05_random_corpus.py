"""A quick sweep over random zonogons: generate, verify, descend.

Samples a small corpus, runs the exact property battery on each polygon, and
tabulates where the Mahler volumes land between the parallelogram floor 8
and the disc ceiling pi^2.
"""

import math

from mahler2d import GenSpec, descend, mahler_volume, random_zonogon
from mahler2d.battery import run_battery

SIZE = 24

failures = 0
volumes = []
print(f"{'n':>3} {'seed':>5} {'M (exact)':>24} {'M (float)':>10} {'steps':>5} {'battery':>8}")
for i in range(SIZE):
    n = 3 + (i % 10)
    spec = GenSpec(n, seed=42 + i)
    P = random_zonogon(spec)
    m = mahler_volume(P)
    trace = descend(P)
    results = run_battery(P, invariance_maps=5)
    ok = all(r.passed for r in results)
    failures += not ok
    volumes.append(float(m))
    print(f"{n:>3} {spec.seed:>5} {str(m):>24} {float(m):>10.6f} "
          f"{len(trace.steps):>5} {'pass' if ok else 'FAIL':>8}")

print()
print(f"batteries failed: {failures} / {SIZE}")
print(f"volume range: [{min(volumes):.6f}, {max(volumes):.6f}]")
print(f"floor 8 respected: {min(volumes) >= 8}")
print(f"ceiling pi^2 = {math.pi ** 2:.6f} respected: {max(volumes) <= math.pi ** 2}")
