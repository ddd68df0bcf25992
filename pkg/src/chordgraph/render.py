"""SVG rendering of chord diagrams.

The drawing lives in the unit-circle coordinate system (circle of radius 1
centered at the origin) scaled to a 512 by 512 viewport. Coordinates are
printed with 12 significant digits; that rounding is display-only, the
diagram itself stays exact.
"""

from __future__ import annotations

import math
from xml.sax.saxutils import escape

from .diagram import ChordDiagram

__all__ = ["render_svg"]

_HEADER = (
    '<svg xmlns="http://www.w3.org/2000/svg" width="512" height="512" '
    'viewBox="-1.1 -1.1 2.2 2.2">'
)


def _fmt(x: float) -> str:
    return f"{x:.12g}"


def _xy(value) -> tuple[float, float]:
    angle = 2.0 * math.pi * float(value)
    return math.cos(angle), math.sin(angle)


def render_svg(d: ChordDiagram) -> str:
    """Well-formed standalone SVG: the circle, one line per chord, and a
    name label at each chord midpoint."""
    parts = [_HEADER]
    parts.append(
        '<circle cx="0" cy="0" r="1" fill="none" stroke="black" stroke-width="0.01"/>'
    )
    for name, chord in d:
        x1, y1 = _xy(chord.p.value)
        x2, y2 = _xy(chord.q.value)
        parts.append(
            f'<line x1="{_fmt(x1)}" y1="{_fmt(y1)}" '
            f'x2="{_fmt(x2)}" y2="{_fmt(y2)}" '
            'stroke="black" stroke-width="0.008"/>'
        )
        mx, my = (x1 + x2) / 2.0, (y1 + y2) / 2.0
        parts.append(
            f'<text x="{_fmt(mx)}" y="{_fmt(my)}" font-size="0.09" '
            f'fill="crimson">{escape(name)}</text>'
        )
    parts.append("</svg>")
    return "\n".join(parts) + "\n"
