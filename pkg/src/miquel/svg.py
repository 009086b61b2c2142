"""Deterministic SVG 1.1 figures of the constructions.

Output depends only on (scene, options): elements are emitted in a fixed
order and every number goes through :func:`num`.
"""
from __future__ import annotations

import math
from dataclasses import dataclass
from html import escape
from typing import Callable, List, Optional, Sequence, Tuple

from .centers import center_case
from .errors import GeometryError, NearLine
from .geom import Circle, Line, Point, circumcircle, intersect_circles
from .locus import (
    auxiliary_data,
    brocard_circle,
    brocard_points,
    frame_line,
    isogonal_circle,
    isogonal_direction,
    isogonal_samples,
    omega_tan,
    symmedian_line,
)
from .miquel_map import CevianPair, forward_miquel, inverse_miquel
from .scene import Scene

FIGURES = ("construction", "locus", "axis", "brocard", "omega_tan", "center", "isogonal")

STROKE = {
    "triangle": "#000000",
    "circle": "#1f5fa8",
    "aux": "#8a8a8a",
    "special": "#b03a2e",
    "line": "#2e7d32",
    "region": "#f4d58d",
}


@dataclass(frozen=True)
class RenderOptions:
    figure: str = "construction"
    size: int = 600
    padding: float = 0.06  # fraction of the viewport left blank on each side
    font_size: int = 13


def num(v: float) -> str:
    """At most 9 significant digits, no trailing zeros, no negative zero.

    Values below 1e-9 viewport units are rounding debris and print as 0.
    """
    if abs(v) < 1e-9:
        return "0"
    return format(v, ".9g")


class _Canvas:
    def __init__(self, box: Tuple[float, float, float, float], opts: RenderOptions):
        x0, y0, x1, y1 = box
        span = max(x1 - x0, y1 - y0)
        inner = opts.size * (1 - 2 * opts.padding)
        self.k = inner / span
        self.ox = opts.size * opts.padding - x0 * self.k + (inner - (x1 - x0) * self.k) / 2
        self.oy = opts.size * opts.padding + y1 * self.k + (inner - (y1 - y0) * self.k) / 2
        self.opts = opts
        self.defs: List[str] = []
        self.body: List[str] = []
        self.labels: List[str] = []

    def xy(self, p: Point) -> Tuple[str, str]:
        return num(self.ox + p.x * self.k), num(self.oy - p.y * self.k)

    def circle(self, c: Circle, kind: str = "circle", dashed: bool = False, width: float = 1.2):
        x, y = self.xy(c.center)
        dash = ' stroke-dasharray="6 4"' if dashed else ""
        self.body.append(f'<circle cx="{x}" cy="{y}" r="{num(c.radius * self.k)}" fill="none" '
                         f'stroke="{STROKE[kind]}" stroke-width="{num(width)}"{dash}/>')

    def segment(self, p: Point, q: Point, kind: str = "line", width: float = 1.2, dashed: bool = False):
        (x1, y1), (x2, y2) = self.xy(p), self.xy(q)
        dash = ' stroke-dasharray="6 4"' if dashed else ""
        self.body.append(f'<line x1="{x1}" y1="{y1}" x2="{x2}" y2="{y2}" '
                         f'stroke="{STROKE[kind]}" stroke-width="{num(width)}"{dash}/>')

    def line(self, l: Line, reach: float, kind: str = "line", dashed: bool = False):
        self.segment(l.at(-reach), l.at(reach), kind, 1.0, dashed)

    def polygon(self, pts: Sequence[Point], kind: str = "triangle"):
        coords = " ".join(",".join(self.xy(p)) for p in pts)
        self.body.append(f'<polygon points="{coords}" fill="none" stroke="{STROKE[kind]}" stroke-width="1.6"/>')

    def point(self, p: Point, label: str):
        x, y = self.xy(p)
        self.body.append(f'<circle cx="{x}" cy="{y}" r="2.5" fill="#000000"/>')
        fs = self.opts.font_size
        lx, ly = num(self.ox + p.x * self.k + 4), num(self.oy - p.y * self.k - 4)
        self.labels.append(f'<text x="{lx}" y="{ly}" font-family="sans-serif" '
                           f'font-size="{fs}">{escape(label)}</text>')

    def region_path(self, circles: Sequence[Circle], inside: Callable[[Point], bool]) -> str:
        """Closed SVG path (evenodd) of the region bounded by arcs of ``circles``."""
        parts = []
        for loop in _chain(circles, _arcs_on_boundary(circles, inside)):
            for n, ((i, a, span), reverse) in enumerate(loop):
                c = circles[i]
                p0, p1 = c.point_at(a), c.point_at(a + span)
                if reverse:
                    p0, p1 = p1, p0
                if n == 0:
                    parts.append("M {} {}".format(*self.xy(p0)))
                r = num(c.radius * self.k)
                if span >= 2 * math.pi - 1e-12:
                    # full circle: two half arcs through the antipode
                    mid = c.point_at(a + math.pi)
                    parts.append("A {r} {r} 0 1 {f} {} {}".format(*self.xy(mid), r=r, f=1 if reverse else 0))
                # world ccw becomes clockwise on the flipped screen: sweep flag 0
                large = 1 if span > math.pi and span < 2 * math.pi - 1e-12 else 0
                parts.append("A {r} {r} 0 {l} {f} {} {}".format(*self.xy(p1), r=r, l=large, f=1 if reverse else 0))
            parts.append("Z")
        return " ".join(parts)

    def document(self, title: str) -> str:
        s = self.opts.size
        head = [
            '<?xml version="1.0" encoding="UTF-8"?>',
            f'<svg xmlns="http://www.w3.org/2000/svg" version="1.1" width="{s}" height="{s}" '
            f'viewBox="0 0 {s} {s}">',
            f"<title>{escape(title)}</title>",
            f'<rect x="0" y="0" width="{s}" height="{s}" fill="#ffffff"/>',
        ]
        defs = ["<defs>", *self.defs, "</defs>"] if self.defs else []
        return "\n".join(head + defs + self.body + self.labels + ["</svg>"]) + "\n"


# Boundary of a region bounded by circular arcs.
#
# Each circle is split at its intersections with the others; an arc is kept when
# its midpoint lies on the region boundary, i.e. when stepping off the arc to one
# side lands inside the region and to the other side lands outside.

Arc = Tuple[int, float, float]  # circle index, start angle, ccw span


def _arcs_on_boundary(circles: Sequence[Circle], inside: Callable[[Point], bool]) -> List[Arc]:
    kept: List[Arc] = []
    for i, c in enumerate(circles):
        cuts = []
        for j, other in enumerate(circles):
            if j != i:
                pts, _ = intersect_circles(c, other)
                cuts += [math.atan2(p.y - c.center.y, p.x - c.center.x) % (2 * math.pi) for p in pts]
        cuts = sorted(cuts)
        merged = [a for k, a in enumerate(cuts) if k == 0 or a - cuts[k - 1] > 1e-12]
        if not merged:
            merged = [0.0]
        for k, a in enumerate(merged):
            b = merged[(k + 1) % len(merged)]
            span = (b - a) % (2 * math.pi) or 2 * math.pi
            mid = a + span / 2
            probe = 1e-6 * c.radius
            dirn = Point(math.cos(mid), math.sin(mid))
            inner = inside(c.center + dirn * (c.radius - probe))
            outer = inside(c.center + dirn * (c.radius + probe))
            if inner != outer:
                kept.append((i, a, span))
    return kept


def _chain(circles: Sequence[Circle], arcs: List[Arc]) -> List[List[Tuple[Arc, bool]]]:
    """Join arcs end to end into closed loops; the flag marks arcs walked clockwise."""
    def ends(arc: Arc) -> Tuple[Point, Point]:
        c = circles[arc[0]]
        return c.point_at(arc[1]), c.point_at(arc[1] + arc[2])

    scale = max(c.radius for c in circles)
    unused = list(arcs)
    loops = []
    while unused:
        first = unused.pop(0)
        loop = [(first, False)]
        start, cur = ends(first)
        while cur.dist(start) > 1e-7 * scale and unused:
            best = min(range(len(unused)), key=lambda k: min(p.dist(cur) for p in ends(unused[k])))
            s0, s1 = ends(unused[best])
            arc = unused.pop(best)
            if s0.dist(cur) <= s1.dist(cur):
                loop.append((arc, False))
                cur = s1
            else:
                loop.append((arc, True))
                cur = s0
        loops.append(loop)
    return loops


def _box(points: Sequence[Point], circles: Sequence[Circle] = ()) -> Tuple[float, float, float, float]:
    xs = [p.x for p in points] + [c.center.x - c.radius for c in circles] + [c.center.x + c.radius for c in circles]
    ys = [p.y for p in points] + [c.center.y - c.radius for c in circles] + [c.center.y + c.radius for c in circles]
    return min(xs), min(ys), max(xs), max(ys)


def _scene_cevians(scene: Scene) -> CevianPair:
    if scene.cevians is not None:
        return CevianPair(*scene.cevians)
    if scene.point is not None:
        return inverse_miquel(scene.triangle, scene.vertex, scene.point, scene.tolerance)
    if scene.center is not None:
        return center_case(scene.triangle, scene.vertex, scene.center, scene.tolerance).cevians
    raise ValueError("construction figure needs cevians, a point or a centre")


def _labels(vertex: str) -> Tuple[str, str, str]:
    i = "ABC".index(vertex)
    return "ABC"[i], "ABC"[(i + 1) % 3], "ABC"[(i + 2) % 3]


def _construction(scene: Scene, opts: RenderOptions, mark: Optional[str] = None) -> str:
    tri, v, tol = scene.triangle, scene.vertex, scene.tolerance
    t = tri.rotated(v)
    cfg = forward_miquel(tri, v, _scene_cevians(scene), tol)
    la, lb, lc = _labels(v)
    circles = [
        circumcircle(t.a, t.b, cfg.b_a, tol),
        circumcircle(t.a, t.c, cfg.c_a, tol),
        circumcircle(t.c, cfg.b_a, cfg.n, tol),
        circumcircle(t.b, cfg.c_a, cfg.n, tol),
    ]
    pts = [t.a, t.b, t.c, cfg.b_a, cfg.c_a, cfg.n, cfg.m]
    cv = _Canvas(_box(pts, circles), opts)
    cv.polygon(t.vertices)
    cv.segment(t.a, cfg.b_a, "triangle", 1.0, dashed=True)
    cv.segment(t.a, cfg.c_a, "triangle", 1.0, dashed=True)
    cv.segment(t.b, cfg.b_a, "line")
    cv.segment(t.c, cfg.c_a, "line")
    for c in circles:
        cv.circle(c)
    for p, name in zip(pts, (la, lb, lc, f"B_{la}", f"C_{la}", f"N_{la}", f"M_{la}")):
        cv.point(p, name)
    if mark:
        cv.point(cfg.m, mark)
    return cv.document(f"Miquel-Steiner point from vertex {la}")


def _locus(scene: Scene, opts: RenderOptions) -> str:
    tri, v, tol = scene.triangle, scene.vertex, scene.tolerance
    t = tri.rotated(v)
    aux = auxiliary_data(tri, v, tol)
    w = t.circumcircle
    la, lb, lc = _labels(v)
    cv = _Canvas(_box(t.vertices, (w, aux.omega_ab, aux.omega_ac)), opts)
    # internal-cevian region: circumdisk with the union of both auxiliary disks removed
    def inside(p: Point) -> bool:
        return w.signed_gap(p) < 0 < min(aux.omega_ab.signed_gap(p), aux.omega_ac.signed_gap(p))

    d = cv.region_path((w, aux.omega_ab, aux.omega_ac), inside)
    cv.body.append(f'<path d="{d}" fill="{STROKE["region"]}" fill-rule="evenodd" stroke="none"/>')
    cv.circle(w)
    cv.circle(aux.omega_ab, "aux", dashed=True)
    cv.circle(aux.omega_ac, "aux", dashed=True)
    cv.polygon(t.vertices)
    for p, name in ((t.a, la), (t.b, lb), (t.c, lc), (aux.main_centre, f"I_{la}")):
        cv.point(p, name)
    if scene.point is not None:
        cv.point(scene.point, "P")
    return cv.document(f"Internal-cevian locus from vertex {la}")


def _axis(scene: Scene, opts: RenderOptions) -> str:
    tri, v, tol = scene.triangle, scene.vertex, scene.tolerance
    t = tri.rotated(v)
    aux = auxiliary_data(tri, v, tol)
    w = t.circumcircle
    la, lb, lc = _labels(v)
    cv = _Canvas(_box(t.vertices, (w, aux.omega_ab, aux.omega_ac)), opts)
    cv.circle(w)
    cv.circle(aux.omega_ab, "aux", dashed=True)
    cv.circle(aux.omega_ac, "aux", dashed=True)
    cv.polygon(t.vertices)
    reach = 2 * t.diameter
    cv.line(aux.axis, reach, "special")
    cv.line(symmedian_line(tri, v, tol), reach, "line", dashed=True)
    cv.segment(aux.o_ab, aux.o_ac, "aux")
    try:
        cv.circle(circumcircle(aux.o_ab, aux.o_ac, aux.main_centre, tol), "special", dashed=True)
    except GeometryError:
        pass
    for p, name in ((t.a, la), (t.b, lb), (t.c, lc), (aux.o_ab, f"O_{la}{lb}"),
                    (aux.o_ac, f"O_{la}{lc}"), (aux.main_centre, f"I_{la}"), (w.center, "O")):
        cv.point(p, name)
    return cv.document(f"Miquel-Steiner axis from vertex {la}")


def _brocard(scene: Scene, opts: RenderOptions) -> str:
    tri, tol = scene.triangle, scene.tolerance
    auxes = [auxiliary_data(tri, x, tol) for x in "ABC"]
    w = tri.circumcircle
    bc = brocard_circle(tri, tol)
    p1, p2 = brocard_points(tri, tol)
    circles = [c for a in auxes for c in (a.omega_ab, a.omega_ac)]
    cv = _Canvas(_box(tri.vertices, [w, bc]), opts)
    cv.circle(w)
    for c in circles:
        cv.circle(c, "aux", dashed=True)
    cv.circle(bc, "special")
    cv.polygon(tri.vertices)
    for p, name in zip(tri.vertices, "ABC"):
        cv.point(p, name)
    for a, name in zip(auxes, ("I_A", "I_B", "I_C")):
        cv.point(a.main_centre, name)
    cv.point(w.center, "O")
    cv.point(p1, "Omega1")
    cv.point(p2, "Omega2")
    return cv.document("Brocard circle and Brocard points")


def _omega_tan(scene: Scene, opts: RenderOptions) -> str:
    tri, v, tol = scene.triangle, scene.vertex, scene.tolerance
    t = tri.rotated(v)
    w = t.circumcircle
    om = omega_tan(tri, v, tol)
    la, lb, lc = _labels(v)
    cv = _Canvas(_box(t.vertices, (w, om)), opts)
    cv.circle(w)
    cv.circle(om, "special")
    cv.polygon(t.vertices)
    cv.segment(om.center, t.b, "aux", dashed=True)
    cv.segment(om.center, t.c, "aux", dashed=True)
    for p, name in ((t.a, la), (t.b, lb), (t.c, lc), (w.center, "O"), (om.center, "T")):
        cv.point(p, name)
    if scene.cevians is not None or scene.point is not None:
        cfg = forward_miquel(tri, v, _scene_cevians(scene), tol)
        cv.segment(t.b, cfg.b_a, "line")
        cv.segment(t.c, cfg.c_a, "line")
        cv.point(cfg.m, f"M_{la}")
    return cv.document(f"Circle of perpendicular-cevian Miquel points from vertex {la}")


def _center(scene: Scene, opts: RenderOptions) -> str:
    if scene.center is None:
        raise ValueError("center figure needs a 'center' payload")
    return _construction(scene, opts, mark=scene.center)


def _isogonal(scene: Scene, opts: RenderOptions) -> str:
    if scene.line_angle is None:
        raise ValueError("isogonal figure needs a 'line_angle' payload")
    tri, v, tol = scene.triangle, scene.vertex, scene.tolerance
    t = tri.rotated(v)
    la, lb, lc = _labels(v)
    l = frame_line(tri, v, scene.line_angle)
    iso = Line(t.a, isogonal_direction(tri, v, l))
    samples = isogonal_samples(tri, v, l, 8, tol)
    try:
        carrier: Optional[Circle] = isogonal_circle(tri, v, l, tol)
        straight = None
    except NearLine as e:
        carrier, straight = None, e.line
    w = t.circumcircle
    cv = _Canvas(_box(list(t.vertices), [w] + ([carrier] if carrier else [])), opts)
    cv.circle(w)
    reach = 2 * t.diameter
    cv.line(l, reach, "line")
    cv.line(iso, reach, "aux", dashed=True)
    if carrier is not None:
        cv.circle(carrier, "special")
    else:
        cv.line(straight, reach, "special")
    cv.polygon(t.vertices)
    for p, name in ((t.a, la), (t.b, lb), (t.c, lc)):
        cv.point(p, name)
    for i, p in enumerate(samples, 1):
        cv.point(p, f"M{i}")
    return cv.document(f"Miquel points for cevian intersections on a line through {la}")


_RENDERERS = {
    "construction": _construction,
    "locus": _locus,
    "axis": _axis,
    "brocard": _brocard,
    "omega_tan": _omega_tan,
    "center": _center,
    "isogonal": _isogonal,
}


def diagnostic_svg(message: str, opts: RenderOptions = RenderOptions()) -> str:
    s = opts.size
    return "\n".join([
        '<?xml version="1.0" encoding="UTF-8"?>',
        f'<svg xmlns="http://www.w3.org/2000/svg" version="1.1" width="{s}" height="{s}" viewBox="0 0 {s} {s}">',
        "<title>error</title>",
        f'<rect x="0" y="0" width="{s}" height="{s}" fill="#ffffff"/>',
        f'<text x="20" y="40" font-family="monospace" font-size="{opts.font_size}" fill="#b03a2e">'
        f"{escape(message)}</text>",
        "</svg>",
    ]) + "\n"


def render_svg(scene: Scene, options: RenderOptions = RenderOptions()) -> str:
    """Render ``options.figure``; construction errors become a diagnostic document."""
    try:
        fn = _RENDERERS[options.figure]
    except KeyError:
        raise ValueError(f"unknown figure {options.figure!r}; choose from {', '.join(FIGURES)}") from None
    try:
        return fn(scene, options)
    except GeometryError as e:
        return diagnostic_svg(str(e), options)
