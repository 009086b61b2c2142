"""Forward and inverse maps between cevian pairs and Miquel-Steiner points.

All functions work "from a vertex": the triangle is cyclically relabelled so
that the chosen vertex plays the role of A, the cevians are BB_A and CC_A
with B_A on line AC and C_A on line AB.
"""
from __future__ import annotations

from dataclasses import dataclass
from functools import lru_cache
from typing import NamedTuple, Tuple

from .errors import (
    BoundaryAmbiguous,
    ExcludedCevian,
    InadmissiblePoint,
    ParallelCevians,
    TangentAtA,
)
from .geom import (
    DEFAULT_TOL,
    Line,
    ParallelVerdict,
    Point,
    Tolerance,
    Triangle,
    circumcircle,
    concyclic_residual,
    intersect_lines,
    reflect_point_about_line,
)

# margins in parameter space (dimensionless) and in units of the triangle diameter
CEVIAN_MARGIN = 1e-9
ADMISSIBLE_MARGIN = 1e-9


@dataclass(frozen=True)
class CevianPair:
    """B_A = A + t_b (C - A), C_A = A + t_c (B - A)."""

    t_b: float
    t_c: float


@dataclass(frozen=True)
class MiquelConfiguration:
    triangle: Triangle
    vertex: str
    cevians: CevianPair
    b_a: Point
    c_a: Point
    n: Point
    m: Point
    residual: float


def _check_param(t: float, name: str, margin: float) -> None:
    if abs(t) <= margin:
        raise ExcludedCevian(f"{name}=0")
    if abs(t - 1.0) <= margin:
        raise ExcludedCevian(f"{name}=1")


def cevian_points(tri: Triangle, vertex: str, cev: CevianPair,
                  margin: float = CEVIAN_MARGIN) -> Tuple[Point, Point]:
    t = tri.rotated(vertex)
    _check_param(cev.t_b, "t_b", margin)
    _check_param(cev.t_c, "t_c", margin)
    a, b, c = t.a, t.b, t.c
    return a + (c - a) * cev.t_b, a + (b - a) * cev.t_c


def _intersection(t: Triangle, b_a: Point, c_a: Point, tol: Tolerance) -> Point:
    n = intersect_lines(Line.through(t.b, b_a), Line.through(t.c, c_a), tol)
    if isinstance(n, ParallelVerdict):
        raise ParallelCevians(n.kind)
    return n


def cevian_intersection(tri: Triangle, vertex: str, cev: CevianPair,
                        tol: Tolerance = DEFAULT_TOL) -> Point:
    b_a, c_a = cevian_points(tri, vertex, cev)
    return _intersection(tri.rotated(vertex), b_a, c_a, tol)


def _four_circles(t: Triangle, b_a: Point, c_a: Point, n: Point):
    return (circumcircle(t.a, t.b, b_a), circumcircle(t.a, t.c, c_a),
            circumcircle(t.c, b_a, n), circumcircle(t.b, c_a, n))


def _residual(t: Triangle, b_a: Point, c_a: Point, n: Point, m: Point) -> float:
    return max(w.gap(m) for w in _four_circles(t, b_a, c_a, n)) / t.diameter


def forward_miquel(tri: Triangle, vertex: str, cev: CevianPair,
                   tol: Tolerance = DEFAULT_TOL) -> MiquelConfiguration:
    """Cevian pair -> Miquel-Steiner point.

    The circles ABB_A and ACC_A share A; their other common point is the
    mirror image of A in the line of centres, which is exact even when the
    circles are close to tangent.
    """
    t = tri.rotated(vertex)
    b_a, c_a = cevian_points(tri, vertex, cev)
    n = _intersection(t, b_a, c_a, tol)
    w1 = circumcircle(t.a, t.b, b_a, tol)
    w2 = circumcircle(t.a, t.c, c_a, tol)
    if w1.center.dist(w2.center) <= tol.eps(t.diameter):
        raise TangentAtA("circles ABB_A and ACC_A coincide")
    m = reflect_point_about_line(t.a, Line.through(w1.center, w2.center))
    if m.dist(t.a) <= tol.eps(t.diameter):
        raise TangentAtA("circles ABB_A and ACC_A meet only at A")
    res = _residual(t, b_a, c_a, n, m)
    return MiquelConfiguration(tri, vertex, cev, b_a, c_a, n, m, res)


@lru_cache(maxsize=1024)
def side_lines(t: Triangle) -> Tuple[Line, Line]:
    """Lines AB and AC of an already relabelled triangle."""
    return Line.through(t.a, t.b), Line.through(t.a, t.c)


def admissibility(tri: Triangle, vertex: str, m: Point,
                  margin: float = ADMISSIBLE_MARGIN) -> str | None:
    """Reason ``m`` is excluded from the inverse map, or None."""
    t = tri.rotated(vertex)
    band = margin * t.diameter
    ab, ac = side_lines(t)
    if ab.distance(m) <= band:
        return "on_AB"
    if ac.distance(m) <= band:
        return "on_AC"
    if t.circumcircle.gap(m) <= band:
        return "on_circumcircle"
    return None


def inverse_miquel(tri: Triangle, vertex: str, m: Point,
                   tol: Tolerance = DEFAULT_TOL,
                   margin: float = ADMISSIBLE_MARGIN) -> CevianPair:
    """Miquel-Steiner point -> the unique cevian pair producing it.

    B_A is the second point of circle ABm on line AC, i.e. the reflection of
    A through the foot of the centre on AC; likewise for C_A.
    """
    reason = admissibility(tri, vertex, m, margin)
    if reason is not None:
        raise InadmissiblePoint(reason)
    t = tri.rotated(vertex)
    a, b, c = t.a, t.b, t.c
    o1 = circumcircle(a, b, m, tol).center
    o2 = circumcircle(a, c, m, tol).center
    ac, ab = c - a, b - a
    t_b = 2.0 * (o1 - a).dot(ac) / ac.dot(ac)
    t_c = 2.0 * (o2 - a).dot(ab) / ab.dot(ab)
    return CevianPair(t_b, t_c)


def concurrency_residual(cfg: MiquelConfiguration) -> float:
    t = cfg.triangle.rotated(cfg.vertex)
    return _residual(t, cfg.b_a, cfg.c_a, cfg.n, cfg.m)


def classify_parameter(t: float, margin: float = CEVIAN_MARGIN) -> str:
    if margin < t < 1.0 - margin:
        return "internal"
    if t < -margin or t > 1.0 + margin:
        return "external"
    raise BoundaryAmbiguous(f"t={t!r}")


def classify_cevians(cev: CevianPair, margin: float = CEVIAN_MARGIN) -> Tuple[str, str]:
    return classify_parameter(cev.t_b, margin), classify_parameter(cev.t_c, margin)


class SideLemma(NamedTuple):
    m_on_bc: bool
    abcn_concyclic: bool
    bc_gap: float
    concyclic_gap: float


def side_lemma_check(cfg: MiquelConfiguration, tol: Tolerance = DEFAULT_TOL) -> SideLemma:
    """Evaluate both sides of "M_A on BC iff A, B_A, C_A, N_A concyclic" independently."""
    t = cfg.triangle.rotated(cfg.vertex)
    bc_gap = Line.through(t.b, t.c).distance(cfg.m) / t.diameter
    cyc = concyclic_residual(t.a, cfg.b_a, cfg.c_a, cfg.n, tol)
    thr = tol.relative_eps
    return SideLemma(bc_gap <= thr, cyc <= thr, bc_gap, cyc)
