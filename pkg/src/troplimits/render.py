"""SVG pictures of polyhedral complexes in the plane.

Cells are clipped to a rational window.  Two-dimensional cells are shaded,
edges drawn as segments with an arrowhead where an unbounded edge leaves
the window, and vertices as dots.
"""
from __future__ import annotations

import math
from fractions import Fraction
from typing import Sequence

from .complexes import Cell, PolyhedralComplex
from .errors import TropError

DEFAULT_WINDOW = (Fraction(-5), Fraction(-5), Fraction(5), Fraction(5))
SIZE = 400


def parse_window(text: str) -> tuple[Fraction, ...]:
    parts = [Fraction(x.strip()) for x in text.split(",")]
    if len(parts) != 4 or not (parts[0] < parts[2] and parts[1] < parts[3]):
        raise ValueError("window must be xmin,ymin,xmax,ymax with xmin < xmax and ymin < ymax")
    return tuple(parts)


def _clip(cell: Cell, window) -> Cell:
    x0, y0, x1, y1 = window
    box = [((Fraction(-1), Fraction(0)), -x0), ((Fraction(1), Fraction(0)), x1),
           ((Fraction(0), Fraction(-1)), -y0), ((Fraction(0), Fraction(1)), y1)]
    return Cell(2, cell.eqs, cell.ineqs + tuple(box))


def _fmt(x: float) -> str:
    s = f"{x:.3f}".rstrip("0").rstrip(".")
    return "0" if s == "-0" else s


class _Canvas:
    def __init__(self, window):
        self.window = window
        x0, y0, x1, y1 = window
        self.scale = SIZE / max(x1 - x0, y1 - y0)

    def xy(self, p) -> str:
        x0, y0, _, y1 = self.window
        return f"{_fmt(float((p[0] - x0) * self.scale))},{_fmt(float((y1 - p[1]) * self.scale))}"


def _order_polygon(verts):
    cx = sum(v[0] for v in verts) / len(verts)
    cy = sum(v[1] for v in verts) / len(verts)
    return sorted(verts, key=lambda v: math.atan2(float(v[1] - cy), float(v[0] - cx)))


def render_svg(C: PolyhedralComplex, window: Sequence = DEFAULT_WINDOW) -> str:
    if C.n != 2:
        raise TropError(f"only complexes in the plane can be drawn (this one lives in R^{C.n})")
    window = tuple(Fraction(x) for x in window)
    cv = _Canvas(window)
    x0, y0, x1, y1 = window
    w = _fmt(float((x1 - x0) * cv.scale))
    h = _fmt(float((y1 - y0) * cv.scale))
    out = [
        f'<svg xmlns="http://www.w3.org/2000/svg" width="{w}" height="{h}" viewBox="0 0 {w} {h}">',
        '<defs><marker id="arrow" viewBox="0 0 10 10" refX="9" refY="5" markerWidth="6" '
        'markerHeight="6" orient="auto-start-reverse"><path d="M0,0 L10,5 L0,10 z" fill="black"/></marker></defs>',
        f'<rect x="0" y="0" width="{w}" height="{h}" fill="white" stroke="gray"/>',
    ]
    if x0 <= 0 <= x1:
        out.append(f'<line x1="{cv.xy((0, y0)).split(",")[0]}" y1="0" '
                   f'x2="{cv.xy((0, y0)).split(",")[0]}" y2="{h}" stroke="#bbb"/>')
    if y0 <= 0 <= y1:
        out.append(f'<line x1="0" y1="{cv.xy((x0, 0)).split(",")[1]}" '
                   f'x2="{w}" y2="{cv.xy((x0, 0)).split(",")[1]}" stroke="#bbb"/>')
    faces, edges, points = [], [], []
    for cell in C.cells:
        d = cell.dim
        if d < 0:
            continue
        clipped = _clip(cell, window)
        verts = clipped.vrep[0]
        if not verts:
            continue
        if d == 2:
            faces.append(_order_polygon(verts))
        elif d == 1:
            if len(verts) == 2:
                rays = cell.vrep[1]
                lines = cell.vrep[2]
                a, b = verts
                if rays and not lines:
                    r = rays[0]
                    # put the far end last so the arrowhead points outwards
                    if sum((q - p) * c for p, q, c in zip(a, b, r)) < 0:
                        a, b = b, a
                edges.append((a, b, bool(rays or lines), bool(lines)))
        else:
            points.append(verts[0])
    for poly in faces:
        pts = " ".join(cv.xy(v) for v in poly)
        out.append(f'<polygon points="{pts}" fill="#9ecae1" fill-opacity="0.5" stroke="none"/>')
    for a, b, unbounded, both in edges:
        pa, pb = cv.xy(a).split(","), cv.xy(b).split(",")
        marker = ' marker-end="url(#arrow)"' if unbounded else ""
        if both:
            marker += ' marker-start="url(#arrow)"'
        out.append(f'<line x1="{pa[0]}" y1="{pa[1]}" x2="{pb[0]}" y2="{pb[1]}" '
                   f'stroke="black" stroke-width="2"{marker}/>')
    for p in points:
        px, py = cv.xy(p).split(",")
        out.append(f'<circle cx="{px}" cy="{py}" r="4" fill="black"/>')
    out.append("</svg>")
    return "\n".join(out) + "\n"
