"""Miquel-Steiner point coinciding with the incenter, orthocenter or circumcenter."""
from __future__ import annotations

import math
from dataclasses import dataclass, field
from typing import List, Optional

from .errors import (
    BisectorParallelToSide,
    ParallelBisectors,
    RightAngleAtVertex,
)
from .geom import (
    DEFAULT_TOL,
    Line,
    ParallelVerdict,
    Point,
    Tolerance,
    Triangle,
    intersect_lines,
    midpoint,
)
from .miquel_map import (
    CevianPair,
    MiquelConfiguration,
    forward_miquel,
    inverse_miquel,
)

CENTER_KINDS = ("incenter", "orthocenter", "circumcenter")


@dataclass(frozen=True)
class CenterCaseReport:
    center_kind: str
    cevians: CevianPair
    config: MiquelConfiguration
    length_residuals: List[float]
    extra: Optional[Point] = None
    # named residuals beyond the length equalities (cross-checks, collinearity, ...)
    checks: dict = field(default_factory=dict)

    @property
    def worst(self) -> float:
        return max(list(self.length_residuals) + list(self.checks.values()))


def classic_center(tri: Triangle, kind: str) -> Point:
    a, b, c = tri.vertices
    if kind == "circumcenter":
        return tri.circumcircle.center
    if kind == "incenter":
        la, lb, lc = b.dist(c), c.dist(a), a.dist(b)
        return (a * la + b * lb + c * lc) / (la + lb + lc)
    if kind == "orthocenter":
        o = tri.circumcircle.center
        return a + b + c - o * 2.0
    raise ValueError(f"unknown centre kind {kind!r}")


def _params(t: Triangle, b_a: Point, c_a: Point) -> CevianPair:
    ac, ab = t.c - t.a, t.b - t.a
    return CevianPair((b_a - t.a).dot(ac) / ac.dot(ac), (c_a - t.a).dot(ab) / ab.dot(ab))


def _param_gap(p: CevianPair, q: CevianPair) -> float:
    return max(abs(p.t_b - q.t_b), abs(p.t_c - q.t_c))


def incenter_case(tri: Triangle, vertex: str = "A", tol: Tolerance = DEFAULT_TOL) -> CenterCaseReport:
    """Cevians for M_A = I; expects |B C_A| = |C B_A| = |BC|."""
    t = tri.rotated(vertex)
    a, b, c = t.vertices
    i = classic_center(t, "incenter")
    cev = inverse_miquel(tri, vertex, i, tol)
    cfg = forward_miquel(tri, vertex, cev, tol)
    bc = b.dist(c)
    lengths = [abs(b.dist(cfg.c_a) - bc) / bc, abs(c.dist(cfg.b_a) - bc) / bc]
    direct = _params(t, c + (a - c).unit() * bc, b + (a - b).unit() * bc)
    checks = {
        "direct_vs_inverse": _param_gap(direct, cev),
        "center_gap": cfg.m.dist(i) / t.diameter,
    }
    return CenterCaseReport("incenter", cev, cfg, lengths, cfg.n, checks)


def _bisector(apex: Point, p: Point, q: Point, external: bool) -> Line:
    u, w = (p - apex).unit(), (q - apex).unit()
    return Line(apex, (u - w).unit() if external else (u + w).unit())


def bisector_candidates(tri: Triangle, vertex: str = "A", tol: Tolerance = DEFAULT_TOL) -> List[Point]:
    """Intersections of the (internal|external) bisectors from B and from C.

    Order: (int, int) = incenter, (int, ext), (ext, int), (ext, ext).
    """
    t = tri.rotated(vertex)
    a, b, c = t.vertices
    out = []
    for eb in (False, True):
        for ec in (False, True):
            p = intersect_lines(_bisector(b, a, c, eb), _bisector(c, a, b, ec), tol)
            if isinstance(p, ParallelVerdict):
                raise ParallelBisectors(f"{'ext' if eb else 'int'}/{'ext' if ec else 'int'}")
            out.append(p)
    return out


def candidate_length_residuals(tri: Triangle, vertex: str, p: Point,
                               tol: Tolerance = DEFAULT_TOL) -> List[float]:
    """|B C_A| and |C B_A| against |BC| for the cevians whose Miquel point is ``p``."""
    t = tri.rotated(vertex)
    cfg = forward_miquel(tri, vertex, inverse_miquel(tri, vertex, p, tol), tol)
    bc = t.b.dist(t.c)
    return [abs(t.b.dist(cfg.c_a) - bc) / bc, abs(t.c.dist(cfg.b_a) - bc) / bc]


def orthocenter_case(tri: Triangle, vertex: str = "A", tol: Tolerance = DEFAULT_TOL) -> CenterCaseReport:
    """Cevians for M_A = H; expects |B B_A| = |C C_A| = |BC|.

    B_A is C mirrored through the foot of the altitude from B, which avoids the
    spurious root B_A = C of the length equation.
    """
    t = tri.rotated(vertex)
    a, b, c = t.vertices
    if abs(t.angle("A") - math.pi / 2) <= tol.relative_eps:
        raise RightAngleAtVertex("orthocenter coincides with the vertex")
    u_b = Line.through(a, c).project(b)
    u_c = Line.through(a, b).project(c)
    b_a, c_a = u_b * 2.0 - c, u_c * 2.0 - b
    cev = _params(t, b_a, c_a)
    cfg = forward_miquel(tri, vertex, cev, tol)
    h = classic_center(t, "orthocenter")
    bc = b.dist(c)
    lengths = [abs(b.dist(cfg.b_a) - bc) / bc, abs(c.dist(cfg.c_a) - bc) / bc]
    inv = inverse_miquel(tri, vertex, h, tol)
    checks = {
        "center_gap": cfg.m.dist(h) / t.diameter,
        "direct_vs_inverse": _param_gap(inv, cev),
    }
    return CenterCaseReport("orthocenter", cev, cfg, lengths, cfg.n, checks)


def circumcenter_case(tri: Triangle, vertex: str = "A", tol: Tolerance = DEFAULT_TOL) -> CenterCaseReport:
    """Cevians for M_A = O; expects |B B_A| = |C B_A|, |C C_A| = |B C_A| and N_A on the circumcircle."""
    t = tri.rotated(vertex)
    a, b, c = t.vertices
    mid = midpoint(b, c)
    bis = Line(mid, (c - b).unit().perp())
    b_a = intersect_lines(bis, Line.through(a, c), tol)
    c_a = intersect_lines(bis, Line.through(a, b), tol)
    if isinstance(b_a, ParallelVerdict) or isinstance(c_a, ParallelVerdict):
        raise BisectorParallelToSide("perpendicular bisector of BC is parallel to a side")
    cev = _params(t, b_a, c_a)
    cfg = forward_miquel(tri, vertex, cev, tol)
    w = t.circumcircle
    d = t.diameter
    lengths = [abs(b.dist(cfg.b_a) - c.dist(cfg.b_a)) / d, abs(c.dist(cfg.c_a) - b.dist(cfg.c_a)) / d]
    inv = inverse_miquel(tri, vertex, w.center, tol)
    checks = {
        "center_gap": cfg.m.dist(w.center) / d,
        "n_on_circumcircle": w.gap(cfg.n) / d,
        "collinear_ba_ca_o": Line.through(cfg.b_a, cfg.c_a).distance(w.center) / d,
        "direct_vs_inverse": _param_gap(inv, cev),
    }
    return CenterCaseReport("circumcenter", cev, cfg, lengths, cfg.n, checks)


CASES = {
    "incenter": incenter_case,
    "orthocenter": orthocenter_case,
    "circumcenter": circumcenter_case,
}


def center_case(tri: Triangle, vertex: str, kind: str, tol: Tolerance = DEFAULT_TOL) -> CenterCaseReport:
    try:
        fn = CASES[kind]
    except KeyError:
        raise ValueError(f"unknown centre kind {kind!r}") from None
    return fn(tri, vertex, tol)
