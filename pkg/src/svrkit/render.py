"""SVG output for drawings, with optional dashed lines-of-sight."""
from __future__ import annotations

from dataclasses import dataclass, field
from fractions import Fraction
from typing import Optional
from xml.sax.saxutils import escape

from .geometry import Coord, Drawing, Family


@dataclass(frozen=True)
class RenderConfig:
    """``eps_substitute`` replaces ε; it must stay below ``1/(2(m+1))`` where
    ``m`` is the largest ε multiple in the drawing, which keeps rendered
    order equal to exact order.  ``None`` picks ``1/(4(m+1))``."""

    eps_substitute: Optional[Fraction] = None
    scale: int = 40
    margin: int = 1
    sight_lines: bool = True
    palette: dict = field(default_factory=lambda: {
        "vertical": "red", "horizontal": "blue", "shape": "black", "label": "black"})

    def eps_for(self, d: Drawing) -> Fraction:
        m = max((abs(c.eps) for s in d for c in (s.l, s.r, s.b, s.t)), default=0)
        bound = Fraction(1, 2 * (m + 1))
        if self.eps_substitute is None:
            return bound / 2
        e = Fraction(self.eps_substitute)
        if not 0 < e < bound:
            raise ValueError(f"eps substitute {e} must lie in (0, {bound}) for this drawing")
        return e


def materialize(c: Coord, eps: Fraction) -> Fraction:
    return c.base + c.eps * eps


def _num(v: Fraction) -> str:
    return f"{float(v):.3f}"


def _top_at(kind, l, b, t, x):
    """Highest point of the shape on the vertical line through ``x``."""
    if kind is Family.LSHAPE and x != l:
        return b
    return t


def sight_lines(boxes, kinds, edges):
    """A vertical segment ``(x, y0, y1)`` realising each edge, in edge order.

    ``boxes[v-1] = (l, r, b, t)`` in materialised units.
    """
    xs = sorted({v for l, r, _, _ in boxes for v in (l, r)})
    samples = xs + [(a + b) / 2 for a, b in zip(xs, xs[1:])]
    samples.sort()
    found = {}
    want = set(edges)
    for x in samples:
        hit = sorted((b, v) for v, (l, r, b, _) in enumerate(boxes, start=1) if l <= x <= r)
        for (b0, u), (b1, v) in zip(hit, hit[1:]):
            e = (min(u, v), max(u, v))
            if e in want and e not in found:
                l, _, b, t = boxes[u - 1]
                found[e] = (x, _top_at(kinds[u - 1], l, b, t, x), b1)
    return [found[e] for e in sorted(want) if e in found]


def render_svg(d: Drawing, ev=(), eh=(), config: RenderConfig = RenderConfig()) -> str:
    eps = config.eps_for(d)
    boxes = [tuple(materialize(c, eps) for c in (s.l, s.r, s.b, s.t)) for s in d]
    kinds = [s.kind for s in d]
    if boxes:
        x0 = min(b[0] for b in boxes) - config.margin
        x1 = max(b[1] for b in boxes) + config.margin
        y0 = min(b[2] for b in boxes) - config.margin
        y1 = max(b[3] for b in boxes) + config.margin
    else:
        x0 = y0 = Fraction(0)
        x1 = y1 = Fraction(1)
    k = config.scale

    def px(x):
        return _num((x - x0) * k)

    def py(y):
        return _num((y1 - y) * k)

    pal = config.palette
    out = [
        '<?xml version="1.0" encoding="UTF-8"?>',
        f'<svg xmlns="http://www.w3.org/2000/svg" version="1.1" width="{_num((x1 - x0) * k)}" '
        f'height="{_num((y1 - y0) * k)}">',
    ]
    for v, ((l, r, b, t), kind) in enumerate(zip(boxes, kinds), start=1):
        if kind is Family.LSHAPE:
            out.append(f'<path d="M {px(l)} {py(t)} L {px(l)} {py(b)} L {px(r)} {py(b)}" fill="none" '
                       f'stroke="{pal["shape"]}" stroke-width="2"/>')
        else:
            out.append(f'<rect x="{px(l)}" y="{py(t)}" width="{_num((r - l) * k)}" height="{_num((t - b) * k)}" '
                       f'fill="none" stroke="{pal["shape"]}" stroke-width="2"/>')
        out.append(f'<text x="{px(l)}" y="{py(b)}" dx="4" dy="-4" font-size="12" '
                   f'fill="{pal["label"]}">{escape(str(v))}</text>')
    if config.sight_lines:
        for x, lo, hi in sight_lines(boxes, kinds, ev):
            out.append(f'<line x1="{px(x)}" y1="{py(lo)}" x2="{px(x)}" y2="{py(hi)}" '
                       f'stroke="{pal["vertical"]}" stroke-dasharray="4 3"/>')
        flipped = [(b, t, l, r) for l, r, b, t in boxes]
        for y, lo, hi in sight_lines(flipped, kinds, eh):
            out.append(f'<line x1="{px(lo)}" y1="{py(y)}" x2="{px(hi)}" y2="{py(y)}" '
                       f'stroke="{pal["horizontal"]}" stroke-dasharray="4 3"/>')
    out.append("</svg>")
    return "\n".join(out) + "\n"
