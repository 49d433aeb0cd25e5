"""SVG output.

Output is deterministic: elements are emitted in scene order and every number
is written with 9 significant digits.  The y-axis is flipped so the figure
reads like the usual drawing with the twins above the diameter.
"""

from __future__ import annotations

import math
from dataclasses import dataclass, field
from xml.sax.saxutils import escape, quoteattr

from .arbelos import verify
from .geom_core import Circle, Line, Point
from .polarity import Conic, ConicKind
from .scene import Scene

DEFAULT_COLORS = {
    "skeleton": "#808080",
    "twin": "#d4a017",
    "icircle": "#8b0000",
    "cousin_icircle": "#1f4fbf",
    "twin_cousin": "#4a90d9",
    "humble": "#800020",
    "sibling": "#2e8b57",
    "dual": "#e07b00",
    "conic": "#7b3fa0",
    "witness": "#000000",
    "doubling": "#a0a0a0",
}


@dataclass(frozen=True)
class SvgStyle:
    width: int = 800
    margin: float = 0.05
    stroke: float = 1.5
    thin: float = 0.8
    conic_points: int = 256
    colors: dict = field(default_factory=lambda: dict(DEFAULT_COLORS))

    def __post_init__(self):
        if self.width <= 0 or self.margin < 0 or self.stroke <= 0 or self.thin <= 0 or self.conic_points < 2:
            raise ValueError("style dimensions must be positive")

    def color_for(self, name: str) -> str:
        for key in ("twin_cousin", "cousin_icircle", "icircle", "twin", "humble", "sibling", "dual"):
            if name.startswith(key):
                return self.colors[key]
        return self.colors["skeleton"]


def _num(v: float) -> str:
    s = format(v, ".9g")
    return "0" if s == "-0" else s


class _Viewport:
    def __init__(self, outer: Circle, style: SvgStyle):
        half = outer.radius * (1.0 + style.margin)
        self.xmin = outer.center.x - half
        self.xmax = outer.center.x + half
        self.ymin = outer.center.y - half
        self.ymax = outer.center.y + half
        self.k = style.width / (2.0 * half)
        self.size = style.width

    def __call__(self, p: Point) -> tuple[str, str]:
        return _num((p.x - self.xmin) * self.k), _num((self.ymax - p.y) * self.k)

    def inside(self, p: Point) -> bool:
        return self.xmin <= p.x <= self.xmax and self.ymin <= p.y <= self.ymax

    def clip_line(self, l: Line) -> tuple[Point, Point] | None:
        """Chord of the viewport rectangle cut by the infinite line."""
        base, d = l.point(), l.direction
        lo, hi = -math.inf, math.inf
        for b, dv, a0, a1 in ((base.x, d.x, self.xmin, self.xmax), (base.y, d.y, self.ymin, self.ymax)):
            if abs(dv) < 1e-15:
                if not a0 <= b <= a1:
                    return None
                continue
            t0, t1 = sorted(((a0 - b) / dv, (a1 - b) / dv))
            lo, hi = max(lo, t0), min(hi, t1)
        if lo >= hi:
            return None
        return base + d * lo, base + d * hi


def _circle(vp: _Viewport, c: Circle, color: str, width: float, cls: str, extra: str = "", dash: str = "") -> str:
    cx, cy = vp(c.center)
    dash_attr = f' stroke-dasharray="{dash}"' if dash else ""
    return (
        f'<circle class="{cls}" cx="{cx}" cy="{cy}" r="{_num(c.radius * vp.k)}" '
        f'fill="none" stroke="{color}" stroke-width="{_num(width)}"{dash_attr}{extra}/>'
    )


def _line(vp: _Viewport, l: Line, color: str, width: float, cls: str) -> str | None:
    seg = vp.clip_line(l)
    if seg is None:
        return None
    (x1, y1), (x2, y2) = vp(seg[0]), vp(seg[1])
    return f'<line class="{cls}" x1="{x1}" y1="{y1}" x2="{x2}" y2="{y2}" stroke="{color}" stroke-width="{_num(width)}"/>'


def conic_polylines(k: Conic, n: int, vp: _Viewport) -> list[list[Point]]:
    """Sample ``k`` in polar form about its focus and split into runs that stay
    inside the viewport.  Hyperbolas draw only :attr:`Conic.branch` when set."""
    e = k.eccentricity
    if k.kind is ConicKind.ELLIPSE:
        thetas = [2 * math.pi * i / n for i in range(n + 1)]
        runs = [thetas]
    else:
        edge = math.acos(min(1.0, 1.0 / e))
        eps = 1e-6
        near = [edge + eps + (2 * math.pi - 2 * edge - 2 * eps) * i / (n - 1) for i in range(n)]
        far = [-edge + eps + (2 * edge - 2 * eps) * i / (n - 1) for i in range(n)]
        if k.kind is ConicKind.PARABOLA or k.branch == 1:
            runs = [near]
        elif k.branch == -1:
            runs = [far]
        else:
            runs = [near, far]
    out = []
    for thetas in runs:
        current: list[Point] = []
        for t in thetas:
            try:
                p = k.point_at(t)
            except Exception:
                p = None
            if p is not None and vp.inside(p):
                current.append(p)
            else:
                if len(current) > 1:
                    out.append(current)
                current = []
        if len(current) > 1:
            out.append(current)
    return out


def _residual_attrs(scene: Scene, name: str) -> str:
    for c in scene.constructions:
        if c.name == name:
            r = verify(c, scene.spec.tol)
            res = " ".join(f'{k["target"]}:{_num(k["residual"])}' for k in r.constraints)
            return f" data-name={quoteattr(name)} data-residuals={quoteattr(res)} data-status={quoteattr(r.status)}"
    return ""


def render_svg(scene: Scene, style: SvgStyle | None = None) -> str:
    style = style or SvgStyle()
    a = scene.arbelos
    vp = _Viewport(a.outer, style)
    col = style.colors
    size = _num(vp.size)
    parts = [
        '<?xml version="1.0" encoding="UTF-8"?>',
        f'<svg xmlns="http://www.w3.org/2000/svg" version="1.1" width="{size}" height="{size}" '
        f'viewBox="0 0 {size} {size}">',
        f"<title>arbelos R1={_num(a.R1)} R2={_num(a.R2)}</title>",
        '<g id="skeleton">',
    ]
    for c in (a.outer, a.c1, a.c2):
        parts.append(_circle(vp, c, col["skeleton"], style.stroke, "skeleton"))
    for l in (a.base, a.l):
        seg = _line(vp, l, col["skeleton"], style.thin, "skeleton")
        if seg:
            parts.append(seg)
    if scene.doubling is not None:
        for c in (scene.doubling.big1, scene.doubling.big2):
            parts.append(_circle(vp, c, col["doubling"], style.thin, "skeleton"))
    parts.append("</g>")

    for c in scene.constructions:
        color = style.color_for(c.name)
        dash = "4 3" if c.name.startswith("dual") else ""
        parts.append(f'<g id={quoteattr(c.name)}>')
        parts.append(_circle(vp, c.circle, color, style.stroke, "construction", _residual_attrs(scene, c.name), dash))
        if scene.spec.show_witnesses:
            parts.extend(_witnesses(vp, c, style))
        parts.append("</g>")

    if scene.conics:
        parts.append('<g id="conics">')
        for name, k in scene.conics:
            for run in conic_polylines(k, style.conic_points, vp):
                pts = " ".join(",".join(vp(p)) for p in run)
                parts.append(
                    f'<polyline class="conic" data-name={quoteattr(name)} points="{pts}" fill="none" '
                    f'stroke="{col["conic"]}" stroke-width="{_num(style.thin)}"/>'
                )
        parts.append("</g>")
    parts.append("</svg>")
    return "\n".join(parts) + "\n"


def _witnesses(vp: _Viewport, c, style: SvgStyle) -> list[str]:
    out = []
    color = style.colors["witness"]
    for key, value in c.witnesses.items():
        if isinstance(value, Point):
            x, y = vp(value)
            out.append(f'<circle class="witness" cx="{x}" cy="{y}" r="2" fill="{color}"/>')
            out.append(f'<text class="witness" x="{x}" y="{y}" font-size="10" dx="3" dy="-3">{escape(key)}</text>')
        elif isinstance(value, Line):
            seg = _line(vp, value, color, style.thin / 2, "witness")
            if seg:
                out.append(seg)
        elif isinstance(value, Circle):
            out.append(_circle(vp, value, style.colors["dual"], style.thin, "witness", dash="2 2"))
    return out
