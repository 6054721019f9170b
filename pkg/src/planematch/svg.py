"""Static SVG rendering of point sets and matchings.

Points are filled circles, matching segments solid lines, and an optional
piercing pair adds one dashed line: the full line through the piercing
segment, clipped to the canvas, showing where it crosses the pierced
segment.  Coordinates are scaled to a 1000x1000 viewbox preserving aspect
ratio (y flipped so the drawing matches mathematical orientation).
Rendering is the only place in the package where floats appear.
"""

from __future__ import annotations

from .geometry import PointSet

CANVAS = 1000.0
MARGIN = 50.0


def _transform(ps: PointSet):
    xs = [p.x for p in ps.points]
    ys = [p.y for p in ps.points]
    span = max(max(xs) - min(xs), max(ys) - min(ys), 1)
    scale = (CANVAS - 2 * MARGIN) / span
    x0, y0 = min(xs), min(ys)
    x_off = (CANVAS - (max(xs) - x0) * scale) / 2
    y_off = (CANVAS - (max(ys) - y0) * scale) / 2

    def to_canvas(p):
        return (
            x_off + (p.x - x0) * scale,
            CANVAS - (y_off + (p.y - y0) * scale),
        )

    return to_canvas


def _clip_line_to_canvas(x1, y1, x2, y2):
    """Intersect the infinite line through two canvas points with the canvas
    square; returns the visible chord endpoints."""
    dx, dy = x2 - x1, y2 - y1
    ts = []
    for axis_value, origin, delta in (
        (0.0, x1, dx),
        (CANVAS, x1, dx),
        (0.0, y1, dy),
        (CANVAS, y1, dy),
    ):
        if abs(delta) > 1e-12:
            ts.append((axis_value - origin) / delta)
    points = []
    for t in ts:
        x, y = x1 + t * dx, y1 + t * dy
        if -1e-9 <= x <= CANVAS + 1e-9 and -1e-9 <= y <= CANVAS + 1e-9:
            points.append((t, x, y))
    points.sort()
    if len(points) < 2:
        return x1, y1, x2, y2
    (_, ax, ay) = points[0]
    (_, bx, by) = points[-1]
    return ax, ay, bx, by


def _f(v: float) -> str:
    return f"{v:.2f}"


def render_svg(ps: PointSet, matching=None, piercing_pair=None) -> str:
    """Standalone SVG document; deterministic for identical arguments."""
    to_canvas = _transform(ps)
    parts = [
        '<?xml version="1.0" encoding="UTF-8"?>',
        f'<svg xmlns="http://www.w3.org/2000/svg" viewBox="0 0 {int(CANVAS)} '
        f'{int(CANVAS)}" width="{int(CANVAS)}" height="{int(CANVAS)}">',
        f'<rect x="0" y="0" width="{int(CANVAS)}" height="{int(CANVAS)}" '
        'fill="white"/>',
    ]

    if piercing_pair is not None:
        (a, b), _cd = piercing_pair
        ax, ay = to_canvas(ps.points[a])
        bx, by = to_canvas(ps.points[b])
        cx1, cy1, cx2, cy2 = _clip_line_to_canvas(ax, ay, bx, by)
        parts.append(
            f'<line x1="{_f(cx1)}" y1="{_f(cy1)}" x2="{_f(cx2)}" y2="{_f(cy2)}" '
            'stroke="#c02020" stroke-width="2" stroke-dasharray="10,8"/>'
        )

    if matching is not None:
        for i, j in matching.pairs:
            x1, y1 = to_canvas(ps.points[i])
            x2, y2 = to_canvas(ps.points[j])
            parts.append(
                f'<line x1="{_f(x1)}" y1="{_f(y1)}" x2="{_f(x2)}" y2="{_f(y2)}" '
                'stroke="black" stroke-width="3"/>'
            )

    for p in ps.points:
        x, y = to_canvas(p)
        parts.append(f'<circle cx="{_f(x)}" cy="{_f(y)}" r="7" fill="black"/>')

    parts.append("</svg>")
    return "\n".join(parts) + "\n"
