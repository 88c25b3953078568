"""Side-by-side SVG rendering of a polygon and its polar dual.

The only place besides the Monte Carlo oracle where rationals are converted
to floats.  The two panels are scaled independently because the dual can be
smaller by orders of magnitude.
"""

from __future__ import annotations

from .geometry import SymPolygon, polar_dual

PANEL = 360.0
MARGIN = 0.05


def _panel(P: SymPolygon, offset_x: float, label: str) -> str:
    xs = [float(v.x) for v in P.vertices]
    ys = [float(v.y) for v in P.vertices]
    span = max(max(xs) - min(xs), max(ys) - min(ys)) or 1.0
    pad = MARGIN * span
    lo_x, lo_y = min(xs) - pad, min(ys) - pad
    scale = PANEL / (span + 2 * pad)

    def to_px(x: float, y: float) -> tuple[float, float]:
        # flip y so the mathematical orientation is upright on screen
        return (offset_x + (x - lo_x) * scale, PANEL - (y - lo_y) * scale)

    pts = " ".join("%.4f,%.4f" % to_px(x, y) for x, y in zip(xs, ys))
    ox, oy = to_px(0.0, 0.0)
    return (
        f'<polygon points="{pts}" fill="#9ecae1" fill-opacity="0.6" '
        f'stroke="#08519c" stroke-width="1.5"/>\n'
        f'<circle cx="{ox:.4f}" cy="{oy:.4f}" r="2.5" fill="#08519c"/>\n'
        f'<text x="{offset_x + PANEL / 2:.1f}" y="{PANEL + 18:.1f}" '
        f'text-anchor="middle" font-family="sans-serif" font-size="13">{label}</text>\n'
    )


def render_svg(P: SymPolygon, dual: SymPolygon | None = None) -> str:
    """An SVG 1.1 document with the polygon (left) and its dual (right)."""
    D = dual if dual is not None else polar_dual(P)
    width = 2 * PANEL + 40
    height = PANEL + 30
    body = _panel(P, 0.0, "polygon") + _panel(D, PANEL + 40, "polar dual")
    return (
        f'<svg xmlns="http://www.w3.org/2000/svg" version="1.1" '
        f'width="{width:.0f}" height="{height:.0f}" '
        f'viewBox="0 0 {width:.0f} {height:.0f}">\n{body}</svg>\n'
    )
