"""Deterministic SVG pictures of arcs and triangulations on a finite window.

Regular marked points are solid dots, accumulation points hollow circles,
arcs quadratic Bezier chords.  Families reaching beyond the window get a
dashed radial tick at the gap their invisible tail escapes to.  Output
bytes depend only on the input.
"""

from __future__ import annotations

import math
from dataclasses import dataclass
from typing import Sequence, Union

from .arcs import Arc
from .surface import Point, Surface
from .triangulation import Family, Moving, Triangulation, Window, _escape


@dataclass(frozen=True)
class RenderSpec:
    radius: int
    highlight: tuple[Arc, ...] = ()
    size: int = 420

    def __post_init__(self) -> None:
        if self.radius < 2:
            raise ValueError("render window radius must be at least 2")


def _fmt(v: float) -> str:
    return f"{v:.2f}"


class _Layout:
    def __init__(self, window: Window, size: int):
        self.size = size
        self.cx = self.cy = size / 2
        self.r = size * 0.42
        pts = window.points
        self.angle = {}
        m = len(pts)
        for i, p in enumerate(pts):
            self.angle[p] = -math.pi / 2 + 2 * math.pi * i / m
        # angles of the gaps between intervals, for truncation ticks
        self.gap_angle = {}
        surface = window.surface
        for k in range(1, surface.intervals + 1):
            acc = Point(surface, k, None) if surface.completed else None
            if acc is not None and acc in self.angle:
                self.gap_angle[k] = self.angle[acc]
            else:
                nxt = 1 if k == surface.intervals else k + 1
                last = max((p for p in pts if p.interval == k and p.pos is not None),
                           key=lambda p: p.pos, default=None)
                first = min((p for p in pts if p.interval == nxt and p.pos is not None),
                            key=lambda p: p.pos, default=None)
                if last is not None and first is not None:
                    a0, a1 = self.angle[last], self.angle[first]
                    if a1 < a0:
                        a1 += 2 * math.pi
                    self.gap_angle[k] = (a0 + a1) / 2

    def xy(self, p: Point) -> tuple[float, float]:
        a = self.angle[p]
        return (self.cx + self.r * math.cos(a), self.cy - self.r * math.sin(a))

    def chord(self, p: Point, q: Point) -> str:
        x1, y1 = self.xy(p)
        x2, y2 = self.xy(q)
        da = abs(self.angle[p] - self.angle[q]) % (2 * math.pi)
        if da > math.pi:
            da = 2 * math.pi - da
        pull = math.cos(da / 2)
        mx = (x1 + x2) / 2
        my = (y1 + y2) / 2
        cxp = self.cx + (mx - self.cx) * pull
        cyp = self.cy + (my - self.cy) * pull
        return f"M {_fmt(x1)} {_fmt(y1)} Q {_fmt(cxp)} {_fmt(cyp)} {_fmt(x2)} {_fmt(y2)}"

    def tick(self, angle: float) -> str:
        x1 = self.cx + self.r * 0.9 * math.cos(angle)
        y1 = self.cy - self.r * 0.9 * math.sin(angle)
        x2 = self.cx + self.r * 1.06 * math.cos(angle)
        y2 = self.cy - self.r * 1.06 * math.sin(angle)
        return f"M {_fmt(x1)} {_fmt(y1)} L {_fmt(x2)} {_fmt(y2)}"


def _truncation_gaps(t: Triangulation, window: Window) -> list[int]:
    """Gaps whose direction hides part of a family beyond the window."""
    gaps: set[int] = set()
    pts = set(window.points)
    n = t.surface.intervals
    for gen in t.generators:
        if not isinstance(gen, Family):
            continue
        visible = gen.domain
        for e in (gen.e0, gen.e1):
            if isinstance(e, Moving):
                positions = sorted(p.pos for p in pts if p.interval == e.interval and p.pos is not None)
                if not positions:
                    visible = None
                    break
                visible = visible.intersect(e.params_with_pos_in(positions[0], positions[-1]))
        movings = gen.moving_endpoints
        if not movings:
            continue
        probe = movings[0]
        for end in (1, -1):
            beyond = (
                visible is None
                or visible.is_empty
                or (end > 0 and (gen.domain.hi is None or (visible.hi is not None and visible.hi < gen.domain.hi)))
                or (end < 0 and (gen.domain.lo is None or (visible.lo is not None and visible.lo > gen.domain.lo)))
            )
            if beyond:
                gaps.add(_escape(probe, end, n)[0])
    return sorted(gaps)


def render_svg(
    subject: Union[Triangulation, Sequence[Arc]],
    spec: RenderSpec,
    surface: Surface | None = None,
) -> str:
    if isinstance(subject, Triangulation):
        surface = subject.surface
        window = Window.symmetric(surface, spec.radius)
        arcs = sorted(subject.arcs_in_window(window), key=lambda a: (a.a.circuit_key(), a.b.circuit_key()))
        trunc_gaps = _truncation_gaps(subject, window)
    else:
        arcs = sorted(set(subject), key=lambda a: (a.a.circuit_key(), a.b.circuit_key()))
        if arcs:
            surface = arcs[0].surface
        elif surface is None:
            raise ValueError("rendering an empty arc list needs an explicit surface")
        window = Window.symmetric(surface, spec.radius)
        arcs = [a for a in arcs if a.a in window.points and a.b in window.points]
        trunc_gaps = []

    lay = _Layout(window, spec.size)
    hl = set(spec.highlight)
    size = spec.size
    parts = [
        f'<svg xmlns="http://www.w3.org/2000/svg" width="{size}" height="{size}" viewBox="0 0 {size} {size}">',
        f'<circle class="boundary" cx="{_fmt(lay.cx)}" cy="{_fmt(lay.cy)}" r="{_fmt(lay.r)}" fill="none" stroke="#999" stroke-width="2"/>',
    ]
    for a in arcs:
        cls = "arc hl" if a in hl else "arc"
        color = "#c22" if a in hl else "#226"
        parts.append(f'<path class="{cls}" d="{lay.chord(a.a, a.b)}" fill="none" stroke="{color}" stroke-width="1.5"/>')
    for gap in trunc_gaps:
        angle = lay.gap_angle.get(gap)
        if angle is not None:
            parts.append(
                f'<path class="trunc" d="{lay.tick(angle)}" fill="none" stroke="#888" stroke-width="1.2" stroke-dasharray="3,2"/>'
            )
    for p in window.points:
        x, y = lay.xy(p)
        if p.pos is None:
            parts.append(f'<circle class="acc" cx="{_fmt(x)}" cy="{_fmt(y)}" r="4" fill="#fff" stroke="#000" stroke-width="1.4"/>')
        else:
            parts.append(f'<circle class="pt" cx="{_fmt(x)}" cy="{_fmt(y)}" r="3" fill="#000"/>')
    parts.append("</svg>")
    return "\n".join(parts) + "\n"
