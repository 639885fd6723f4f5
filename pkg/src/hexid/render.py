"""Text and SVG pictures of the code in a window."""

from __future__ import annotations

from .code import CodeParams, Predicate, predicate
from .lattice import Window

MAX_AREA = 10**6

SCALE = 20
PAD = 10


def _check(w: Window) -> Window:
    w = Window(*w).validate()
    if w.area > MAX_AREA:
        raise ValueError(f"window has {w.area} vertices, limit is {MAX_AREA}")
    return w


def _kind(x: int, y: int, p: CodeParams, member: Predicate) -> str:
    if member((x, y)):
        return "#"
    if y % p.row_spacing == 0:
        return "o"
    return "."


def render_text(p: CodeParams, w: Window, member: Predicate | None = None) -> str:
    """One character per vertex, top row first: ``#`` codeword, ``o`` other vertex of a ``C'`` row, ``.`` the rest."""
    w = _check(w)
    member = member or predicate(p)
    rows = (
        "".join(_kind(x, y, p, member) for x in range(w.x0, w.x1 + 1))
        for y in range(w.y1, w.y0 - 1, -1)
    )
    return "\n".join(rows) + "\n"


def render_svg(p: CodeParams, w: Window, member: Predicate | None = None) -> str:
    w = _check(w)
    member = member or predicate(p)

    def pos(x: int, y: int) -> tuple[int, int]:
        return PAD + (x - w.x0) * SCALE, PAD + (w.y1 - y) * SCALE

    width = 2 * PAD + (w.width - 1) * SCALE
    height = 2 * PAD + (w.height - 1) * SCALE
    out = [
        '<?xml version="1.0" encoding="UTF-8"?>',
        f'<svg xmlns="http://www.w3.org/2000/svg" width="{width}" height="{height}" '
        f'viewBox="0 0 {width} {height}">',
        f"<title>r={p.r} window x={w.x0}..{w.x1} y={w.y0}..{w.y1}</title>",
        '<g class="edges" stroke="#888" stroke-width="1.5">',
    ]
    for y in range(w.y0, w.y1 + 1):
        for x in range(w.x0, w.x1 + 1):
            x1, y1 = pos(x, y)
            if x < w.x1:
                x2, y2 = pos(x + 1, y)
                out.append(f'<line x1="{x1}" y1="{y1}" x2="{x2}" y2="{y2}"/>')
            if y < w.y1 and (x + y) % 2 == 0:
                x2, y2 = pos(x, y + 1)
                out.append(f'<line x1="{x1}" y1="{y1}" x2="{x2}" y2="{y2}"/>')
    out.append("</g>")
    out.append('<g class="vertices" stroke="black" stroke-width="1.5">')
    style = {
        "#": 'r="6" fill="black"',
        "o": 'r="6" fill="white"',
        ".": 'r="2" fill="#888" stroke="none"',
    }
    for y in range(w.y0, w.y1 + 1):
        for x in range(w.x0, w.x1 + 1):
            cx, cy = pos(x, y)
            out.append(f'<circle cx="{cx}" cy="{cy}" {style[_kind(x, y, p, member)]}/>')
    out.append("</g>")
    out.append("</svg>")
    return "\n".join(out) + "\n"
