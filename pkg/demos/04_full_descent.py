"""A complete descent: from a many-sided polygon down to a parallelogram.

Each step deletes the antipodal edge pair with the largest qualifying gap;
the Mahler volume strictly decreases and lands exactly on 8, which certifies
that the starting polygon's volume was at least 8.  Optionally renders
side-by-side SVG frames of each step.
"""

import os
import sys

from mahler2d import GenSpec, descend, mahler_volume, named_polygon, random_zonogon
from mahler2d.svg import render_svg


def run(title, P):
    print(f"{title} ({2 * P.n} vertices, M = {mahler_volume(P)}"
          f" = {float(mahler_volume(P)):.6f})")
    trace = descend(P)
    for i, step in enumerate(trace.steps):
        move = step.move
        print(f"  step {i}: {2 * step.polygon.n}-gon, M = {step.mahler}"
              f" = {float(step.mahler):.6f}, delete {move.side} edge pair"
              f" {move.edge} (gap {move.gap})")
    print(f"  final: parallelogram, M = {trace.final_mahler}")
    print()
    return trace


run("octagon", named_polygon("oct8"))
trace = run("random zonogon, n = 12", random_zonogon(GenSpec(12, seed=5)))
run("random zonogon, n = 20", random_zonogon(GenSpec(20, seed=6)))

if "--svg" in sys.argv:
    out = os.path.join(os.path.dirname(__file__) or ".", "descent_frames")
    os.makedirs(out, exist_ok=True)
    for i, step in enumerate(trace.steps):
        with open(os.path.join(out, f"step_{i:03d}.svg"), "w") as fh:
            fh.write(render_svg(step.polygon, step.dual))
    with open(os.path.join(out, "final.svg"), "w") as fh:
        fh.write(render_svg(trace.final))
    print(f"wrote {len(trace.steps) + 1} SVG frames to {out}/")
