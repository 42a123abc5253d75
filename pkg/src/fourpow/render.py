"""SVG drawings of path records.

Paths are drawn on a unit grid as a polyline; marked peaks get a filled red
circle at the apex and crossings of the x-axis a filled red square.  All
drawing happens inside a group whose transform maps lattice coordinates to
pixels, so element coordinates in the output are lattice coordinates.  The
output is a pure function of the input.
"""

from __future__ import annotations

from . import paths as P
from .bijections import HeightLabeledPath, MarkedBridge, MarkedPeakPath, TwoColoredBridge
from .errors import FourPowError

UNIT = 20
MARGIN = 20
COLOR_1 = "#1f4e9c"
COLOR_2 = "#d9822b"
MARK = "#d62728"


def _num(x: float) -> str:
    return f"{x:g}"


def _polyline(steps: str, x0: int, y0: int, color: str) -> str:
    pts = [(x0, y0)]
    for s in steps:
        x, y = pts[-1]
        pts.append((x + 1, y + (1 if s == P.UP else -1)))
    coords = " ".join(f"{x},{y}" for x, y in pts)
    return (
        f'<polyline points="{coords}" fill="none" stroke="{color}" stroke-width="3" '
        f'stroke-linejoin="round" vector-effect="non-scaling-stroke"/>'
    )


def _circle(x: int, y: int) -> str:
    return f'<circle class="peak" cx="{x}" cy="{y}" r="0.3" fill="{MARK}"/>'


def _square(x: int, y: int) -> str:
    return (
        f'<rect class="crossing" x="{_num(x - 0.25)}" y="{_num(y - 0.25)}" '
        f'width="0.5" height="0.5" fill="{MARK}"/>'
    )


def _layout(obj):
    """``(segments, circles, squares)``; segments are ``(steps, x0, y0, color)``."""
    if isinstance(obj, str):
        return [(obj, 0, 0, COLOR_1)], [], [(c, 0) for c in P.crossings(obj)]
    if isinstance(obj, (MarkedPeakPath, HeightLabeledPath, MarkedBridge)):
        pk = P.peak_at(obj.path, obj.peak)
        return (
            [(obj.path, 0, 0, COLOR_1)],
            [(pk.up_index + 1, pk.height)],
            [(c, 0) for c in P.crossings(obj.path)],
        )
    if isinstance(obj, TwoColoredBridge):
        k = len(obj.first)
        squares = [(c, 0) for c in P.crossings(obj.first)] + [(k + c, 0) for c in P.crossings(obj.second)]
        return [(obj.first, 0, 0, COLOR_1), (obj.second, k, 0, COLOR_2)], [], squares
    raise FourPowError(f"cannot render a {type(obj).__name__}; expected a path-like record")


def render_svg(obj) -> str:
    segments, circles, squares = _layout(obj)
    steps = "".join(s for s, *_ in segments)
    alts = P.altitudes(steps)
    width = max(len(steps), 1)
    lo, hi = min(alts), max(max(alts), 1)

    grid = []
    for x in range(0, width + 1):
        grid.append(f"M{x},{lo}V{hi}")
    for y in range(lo, hi + 1):
        grid.append(f"M0,{y}H{width}")

    body = [
        f'<path class="grid" d="{"".join(grid)}" stroke="#d3d3d3" stroke-width="0.5" '
        f'fill="none" vector-effect="non-scaling-stroke"/>',
        f'<path class="axes" d="M0,0H{width}M0,{lo}V{hi}" stroke="#000000" stroke-width="1.5" '
        f'fill="none" vector-effect="non-scaling-stroke"/>',
    ]
    body += [_polyline(*seg) for seg in segments if seg[0]]
    body += [_circle(x, y) for x, y in circles]
    body += [_square(x, y) for x, y in squares]

    px_w = width * UNIT + 2 * MARGIN
    px_h = (hi - lo) * UNIT + 2 * MARGIN
    head = (
        f'<svg xmlns="http://www.w3.org/2000/svg" version="1.1" width="{px_w}" height="{px_h}" '
        f'viewBox="0 0 {px_w} {px_h}">'
    )
    group = f'<g transform="translate({MARGIN},{MARGIN + hi * UNIT}) scale({UNIT},{-UNIT})">'
    return "\n".join([head, group, *body, "</g>", "</svg>"]) + "\n"
