"""Internal-cevian locus, auxiliary (conjugate) circles, Brocard objects and
the special loci for perpendicular, antiparallel and line-constrained cevians.
"""
from __future__ import annotations

import cmath
import math
from dataclasses import dataclass
from enum import Enum
from functools import lru_cache
from typing import List, Tuple

import numpy as np

from .errors import (
    DegenerateOI,
    DegenerateSamples,
    GeometryError,
    LineAlongSide,
    NearEquilateralDegeneracy,
    NearLine,
    SingularDenominator,
    TangentsParallel,
)
from .geom import (
    DEFAULT_TOL,
    Circle,
    Line,
    ParallelVerdict,
    Point,
    Tolerance,
    Triangle,
    angle_at,
    angle_between_lines,
    circumcircle,
    concyclic_residual,
    intersect_lines,
    invert_point,
    midpoint,
    orientation,
    reflect_point_about_line,
    tangent_circle_through,
    tangent_line_at,
)
from .miquel_map import CevianPair, MiquelConfiguration, forward_miquel, side_lines


@dataclass(frozen=True)
class AuxiliaryData:
    omega_ab: Circle
    omega_ac: Circle
    o_ab: Point
    o_ac: Point
    main_centre: Point
    axis: Line


class LocusVerdict(str, Enum):
    MEMBER = "member"
    EXCLUDED_OUTSIDE_CIRCUMDISK = "excluded_outside_circumdisk"
    EXCLUDED_IN_BOTH_AUX_DISKS = "excluded_in_both_aux_disks"
    EXCLUDED_IN_ONE_AUX_DISK = "excluded_in_one_aux_disk"
    BOUNDARY = "boundary"
    INADMISSIBLE = "inadmissible"


@dataclass(frozen=True)
class BrocardData:
    second_triangle: Tuple[Point, Point, Point]
    circle: Circle
    points: Tuple[Point, Point]


def aux_circle(x: Point, y: Point, z: Point, tol: Tolerance = DEFAULT_TOL) -> Circle:
    """Circle tangent to line XY at X and passing through Z."""
    return tangent_circle_through(Line.through(x, y), x, z, tol)


def _second_common_point(c1: Circle, c2: Circle, shared: Point) -> Point:
    # both circles pass through ``shared``; the other point is its mirror in the centre line
    return reflect_point_about_line(shared, Line.through(c1.center, c2.center))


@lru_cache(maxsize=1024)
def auxiliary_data(tri: Triangle, vertex: str = "A", tol: Tolerance = DEFAULT_TOL) -> AuxiliaryData:
    t = tri.rotated(vertex)
    w_ab = aux_circle(t.a, t.b, t.c, tol)
    w_ac = aux_circle(t.a, t.c, t.b, tol)
    i_a = _second_common_point(w_ab, w_ac, t.a)
    return AuxiliaryData(w_ab, w_ac, w_ab.center, w_ac.center, i_a, Line.through(t.a, i_a))


def theorem2_residuals(tri: Triangle, vertex: str = "A",
                       tol: Tolerance = DEFAULT_TOL) -> Tuple[float, float, float]:
    """(concyclicity of O_AB, O_AC, I_A, O;  angle O_AB O_AC vs O I_A;  |angle(O I_A, A I_A) - pi/2|)."""
    t = tri.rotated(vertex)
    aux = auxiliary_data(tri, vertex, tol)
    o = t.circumcircle.center
    if o.dist(aux.main_centre) <= tol.eps(t.diameter):
        raise DegenerateOI("main centre coincides with the circumcentre")
    cyc = concyclic_residual(aux.o_ab, aux.o_ac, aux.main_centre, o, tol)
    oi = Line.through(o, aux.main_centre)
    par = angle_between_lines(Line.through(aux.o_ab, aux.o_ac), oi)
    perp = abs(angle_between_lines(oi, aux.axis) - math.pi / 2)
    return cyc, par, perp


def second_brocard_triangle(tri: Triangle, tol: Tolerance = DEFAULT_TOL) -> Tuple[Point, Point, Point]:
    return tuple(auxiliary_data(tri, v, tol).main_centre for v in "ABC")


def brocard_circle(tri: Triangle, tol: Tolerance = DEFAULT_TOL) -> Circle:
    i_a, i_b, i_c = second_brocard_triangle(tri, tol)
    if orientation(i_a, i_b, i_c, tol) == 0:
        raise NearEquilateralDegeneracy("main centres are collinear or coincident")
    return circumcircle(i_a, i_b, i_c, tol)


def brocard_points(tri: Triangle, tol: Tolerance = DEFAULT_TOL) -> Tuple[Point, Point]:
    """Common points of (w_AC, w_BA, w_CB) and of the mirror triple (w_AB, w_BC, w_CA).

    ``w_XY`` is tangent to XY at X and passes through the third vertex.
    """
    a, b, c = tri.vertices
    w_ac, w_ba, w_cb = aux_circle(a, c, b, tol), aux_circle(b, a, c, tol), aux_circle(c, b, a, tol)
    w_ab, w_bc, w_ca = aux_circle(a, b, c, tol), aux_circle(b, c, a, tol), aux_circle(c, a, b, tol)
    # w_AC and w_BA both pass through B; w_AB and w_BC both pass through A
    first = _second_common_point(w_ac, w_ba, b)
    second = _second_common_point(w_ab, w_bc, a)
    return first, second


def brocard_point_residuals(tri: Triangle, tol: Tolerance = DEFAULT_TOL) -> Tuple[float, float]:
    """Distance of each Brocard point to its third defining circle, over the diameter."""
    a, b, c = tri.vertices
    p1, p2 = brocard_points(tri, tol)
    d = tri.diameter
    return aux_circle(c, b, a, tol).gap(p1) / d, aux_circle(c, a, b, tol).gap(p2) / d


def brocard_angles(tri: Triangle, p: Point) -> Tuple[Tuple[float, float, float], Tuple[float, float, float]]:
    """Angles PAB, PBC, PCA and PBA, PCB, PAC; one triple is constant at a Brocard point."""
    a, b, c = tri.vertices
    return ((angle_at(a, p, b), angle_at(b, p, c), angle_at(c, p, a)),
            (angle_at(b, p, a), angle_at(c, p, b), angle_at(a, p, c)))


def brocard_angle(tri: Triangle, p: Point) -> float:
    """The common angle seen from Brocard point ``p`` (mean of the flatter triple)."""
    fam = brocard_angles(tri, p)
    best = min(fam, key=lambda tr: max(tr) - min(tr))
    return sum(best) / 3.0


def _tangent_pole(t: Triangle, tol: Tolerance) -> Point:
    """Intersection of the circumcircle tangents at B and C."""
    w = t.circumcircle
    m = intersect_lines(tangent_line_at(w, t.b, tol), tangent_line_at(w, t.c, tol), tol)
    if isinstance(m, ParallelVerdict):
        raise TangentsParallel("BC is a diameter of the circumcircle")
    return m


def _bisector_reflected_median(t: Triangle) -> Line:
    ub, uc = (t.b - t.a).unit(), (t.c - t.a).unit()
    bis = Line(t.a, (ub + uc).unit())
    return Line.through(t.a, reflect_point_about_line(midpoint(t.b, t.c), bis))


def symmedian_line(tri: Triangle, vertex: str = "A", tol: Tolerance = DEFAULT_TOL) -> Line:
    """Line from the vertex through the pole of the opposite side.

    Falls back to the reflection of the median in the angle bisector when the
    tangents are parallel (right angle at the vertex).
    """
    t = tri.rotated(vertex)
    try:
        return Line.through(t.a, _tangent_pole(t, tol))
    except TangentsParallel:
        return _bisector_reflected_median(t)


def symmedian_crosscheck(tri: Triangle, vertex: str = "A", tol: Tolerance = DEFAULT_TOL) -> float:
    """Angle between the tangent-pole and bisector-reflection constructions."""
    t = tri.rotated(vertex)
    return angle_between_lines(symmedian_line(tri, vertex, tol), _bisector_reflected_median(t))


def locus_membership(tri: Triangle, vertex: str, p: Point, band: float | None = None,
                     tol: Tolerance = DEFAULT_TOL) -> LocusVerdict:
    """Classify ``p`` against the internal-cevian locus.

    The locus is the circumdisk with both auxiliary disks removed: a point
    inside the disk of w_AB forces C_A outside segment AB, a point inside the
    disk of w_AC forces B_A outside segment AC, so both cevians are internal
    only outside the union of the two.

    ``band`` is the half-width (length units) of the boundary zone around each
    bounding circle and around lines AB, AC; it defaults to the tolerance.
    """
    t = tri.rotated(vertex)
    if band is None:
        band = tol.eps(t.diameter)
    ab, ac = side_lines(t)
    if ab.distance(p) <= band or ac.distance(p) <= band:
        return LocusVerdict.INADMISSIBLE
    aux = auxiliary_data(tri, vertex, tol)
    g0 = t.circumcircle.signed_gap(p)
    g1 = aux.omega_ab.signed_gap(p)
    g2 = aux.omega_ac.signed_gap(p)
    if min(abs(g0), abs(g1), abs(g2)) <= band:
        return LocusVerdict.BOUNDARY
    if g0 > 0:
        return LocusVerdict.EXCLUDED_OUTSIDE_CIRCUMDISK
    if g1 < 0 and g2 < 0:
        return LocusVerdict.EXCLUDED_IN_BOTH_AUX_DISKS
    if g1 < 0 or g2 < 0:
        return LocusVerdict.EXCLUDED_IN_ONE_AUX_DISK
    return LocusVerdict.MEMBER


def omega_tan(tri: Triangle, vertex: str = "A", tol: Tolerance = DEFAULT_TOL) -> Circle:
    """Circle through B and C centred at the pole of BC."""
    t = tri.rotated(vertex)
    m = _tangent_pole(t, tol)
    return Circle(m, 0.5 * (m.dist(t.b) + m.dist(t.c)))


@dataclass(frozen=True)
class PerpendicularityGaps:
    cevian_angle_gap: float
    omega_tan_gap: float
    degenerate_line: bool = False  # right angle at the vertex: omega_tan collapses to line BC


def perpendicularity_equivalence(tri: Triangle, vertex: str, cev: CevianPair,
                                 tol: Tolerance = DEFAULT_TOL) -> PerpendicularityGaps:
    cfg = forward_miquel(tri, vertex, cev, tol)
    t = tri.rotated(vertex)
    ang = angle_between_lines(Line.through(t.b, cfg.b_a), Line.through(t.c, cfg.c_a))
    try:
        gap = omega_tan(tri, vertex, tol).gap(cfg.m) / t.diameter
        degenerate = False
    except TangentsParallel:
        gap = Line.through(t.b, t.c).distance(cfg.m) / t.diameter
        degenerate = True
    return PerpendicularityGaps(abs(math.pi / 2 - ang), gap, degenerate)


def cevians_through(tri: Triangle, vertex: str, n: Point, tol: Tolerance = DEFAULT_TOL) -> CevianPair:
    """The cevian pair BB_A, CC_A whose lines meet at ``n``."""
    t = tri.rotated(vertex)
    a, b, c = t.a, t.b, t.c
    ac, ab = Line.through(a, c), Line.through(a, b)
    b_a = intersect_lines(Line.through(b, n), ac, tol)
    c_a = intersect_lines(Line.through(c, n), ab, tol)
    if isinstance(b_a, ParallelVerdict) or isinstance(c_a, ParallelVerdict):
        raise DegenerateSamples("cevian through the point is parallel to a side")
    return CevianPair(ac.param(b_a) / a.dist(c), ab.param(c_a) / a.dist(b))


def parallel_antiparallel_check(tri: Triangle, vertex: str, cev: CevianPair,
                                tol: Tolerance = DEFAULT_TOL) -> Tuple[float, float]:
    """(angle between B_A C_A and BC, distance of M_A to the symmedian / diameter)."""
    cfg = forward_miquel(tri, vertex, cev, tol)
    t = tri.rotated(vertex)
    par = angle_between_lines(Line.through(cfg.b_a, cfg.c_a), Line.through(t.b, t.c))
    sym = symmedian_line(tri, vertex, tol).distance(cfg.m) / t.diameter
    return par, sym


# Complex frame with A = 0, C = 1, B = b0 exp(i beta0), beta0 in (0, pi).

@dataclass(frozen=True)
class Frame:
    a: complex
    ac: complex
    flip: bool

    def to_frame(self, p: Point) -> complex:
        z = (p.to_complex() - self.a) / self.ac
        return z.conjugate() if self.flip else z

    def to_world(self, z: complex) -> Point:
        if self.flip:
            z = z.conjugate()
        return Point.from_complex(self.a + self.ac * z)

    def direction_to_world(self, d: complex) -> Point:
        if self.flip:
            d = d.conjugate()
        return Point.from_complex(self.ac * d)


def normal_frame(tri: Triangle, vertex: str = "A") -> Frame:
    t = tri.rotated(vertex)
    a = t.a.to_complex()
    ac = t.c.to_complex() - a
    zb = (t.b.to_complex() - a) / ac
    return Frame(a, ac, zb.imag < 0)


def frame_parameters(tri: Triangle, vertex: str = "A") -> Tuple[float, float]:
    """(b0, beta0) of the vertex B in the normal frame."""
    f = normal_frame(tri, vertex)
    zb = f.to_frame(tri.rotated(vertex).b)
    return abs(zb), cmath.phase(zb)


def closed_form_statement4(b0: float, beta0: float, m: float, mu0: float,
                           eps: float = 1e-12) -> Tuple[complex, complex, complex]:
    """Cevian bases and cevian intersection when M_A = m exp(i mu0).

    N_A uses the component formulas
        Re N_A = 1 + b0 cos(beta0) - (b0/m) cos(mu0 - beta0)
        Im N_A = b0 sin(beta0) + (b0/m) sin(mu0 - beta0)
    """
    s_mb = math.sin(mu0 - beta0)
    s_m = math.sin(mu0)
    if abs(m) <= eps:
        raise SingularDenominator("m")
    if abs(s_mb) <= eps:
        raise SingularDenominator("sin(mu0-beta0)")
    if abs(s_m) <= eps:
        raise SingularDenominator("sin(mu0)")
    b_a = (b0 * s_m - m * math.sin(beta0)) / s_mb
    c_a = (m * math.sin(beta0) + s_mb) / s_m * cmath.exp(1j * beta0)
    re = 1 + b0 * math.cos(beta0) - b0 / m * math.cos(mu0 - beta0)
    im = b0 * math.sin(beta0) + b0 / m * s_mb
    return complex(b_a), c_a, complex(re, im)


def statement4_image_line(tri: Triangle, vertex: str, mu0: float,
                          tol: Tolerance = DEFAULT_TOL) -> Line:
    """Line carrying N_A while M_A runs over the line through A at angle ``mu0``.

    ``mu0`` is measured from ray AC in the normal frame (towards B).
    """
    _, beta0 = frame_parameters(tri, vertex)
    if abs(math.sin(mu0)) <= tol.relative_eps or abs(math.sin(mu0 - beta0)) <= tol.relative_eps:
        raise LineAlongSide("line lies along AB or AC")
    t = tri.rotated(vertex)
    f = normal_frame(tri, vertex)
    d = f.direction_to_world(cmath.exp(1j * (beta0 - mu0)))
    return Line(t.b + t.c - t.a, d.unit())


def frame_line(tri: Triangle, vertex: str, mu0: float) -> Line:
    """World line through the vertex at frame angle ``mu0``."""
    t = tri.rotated(vertex)
    f = normal_frame(tri, vertex)
    return Line(t.a, f.direction_to_world(cmath.exp(1j * mu0)).unit())


def isogonal_direction(tri: Triangle, vertex: str, l: Line) -> Point:
    """Direction of the reflection of ``l`` in the internal bisector at the vertex."""
    t = tri.rotated(vertex)
    bis = Line(t.a, ((t.b - t.a).unit() + (t.c - t.a).unit()).unit())
    return (reflect_point_about_line(t.a + l.direction, bis) - t.a).unit()


# Cevian intersections on a line through A give Miquel points on a circle.

_SAMPLE_PARAMS = (0.37, 0.71, -0.53, 1.13, -1.31, 0.23, 1.61, -0.29, 0.89, -0.83, 1.97, 0.53, -1.7)


def _miquel_for_intersection(tri: Triangle, vertex: str, n: Point, tol: Tolerance) -> MiquelConfiguration:
    return forward_miquel(tri, vertex, cevians_through(tri, vertex, n, tol), tol)


def isogonal_samples(tri: Triangle, vertex: str, l: Line, count: int,
                     tol: Tolerance = DEFAULT_TOL, offset: int = 0) -> List[Point]:
    """Miquel points for ``count`` admissible cevian intersections on ``l``."""
    t = tri.rotated(vertex)
    out: List[Point] = []
    k = offset
    while len(out) < count:
        if k - offset > 20 * count + 40:
            raise DegenerateSamples("could not find admissible cevian intersections on the line")
        s = _SAMPLE_PARAMS[k % len(_SAMPLE_PARAMS)] * (1.0 + 0.173 * (k // len(_SAMPLE_PARAMS)))
        k += 1
        try:
            cfg = _miquel_for_intersection(tri, vertex, l.at(s * t.diameter), tol)
        except GeometryError:
            continue
        out.append(cfg.m)
    return out


def isogonal_circle(tri: Triangle, vertex: str, l: Line, tol: Tolerance = DEFAULT_TOL,
                    checks: int = 10, check_tol: float = 1e-8) -> Circle:
    """Circle carrying the Miquel points when N_A runs over ``l`` (a line through the vertex).

    Fitted through three sampled Miquel points and verified on ``checks``
    further samples. Raises NearLine when the locus is a straight line, which
    happens when ``l`` is the median.
    """
    t = tri.rotated(vertex)
    if l.distance(t.a) > tol.eps(t.diameter):
        raise ValueError("line must pass through the vertex")
    if (angle_between_lines(l, Line.through(t.a, t.b)) <= tol.relative_eps
            or angle_between_lines(l, Line.through(t.a, t.c)) <= tol.relative_eps):
        raise LineAlongSide("line lies along AB or AC")
    d = t.diameter
    pts = isogonal_samples(tri, vertex, l, 3 + checks, tol)
    fit_pts, held = pts[:3], pts[3:]
    bad = _near_collinear(fit_pts, d)
    if bad:
        # resample with a different spread before giving up
        fit_pts = [pts[0], pts[-1], pts[len(pts) // 2]]
        bad = _near_collinear(fit_pts, d)
    if bad:
        raise NearLine("Miquel points are collinear", line=_fit_line(pts))
    circle = circumcircle(*fit_pts, tol=tol)
    worst = max((circle.gap(p) for p in held), default=0.0) / d
    if worst > check_tol:
        raise DegenerateSamples(f"held-out samples miss the circle by {worst:.3g}")
    return circle


def _near_collinear(pts, scale, rel=1e-7):
    p, q, r = pts
    return abs((q - p).cross(r - p)) <= rel * scale * max(p.dist(q), q.dist(r), p.dist(r))


def _fit_line(pts: List[Point]) -> Line:
    xy = np.array([[p.x, p.y] for p in pts])
    c = xy.mean(axis=0)
    _, _, vt = np.linalg.svd(xy - c)
    return Line(Point(float(c[0]), float(c[1])), Point(float(vt[0, 0]), float(vt[0, 1])))


def line_fit_residual(pts: List[Point]) -> float:
    """Largest distance from the points to their total-least-squares line."""
    l = _fit_line(pts)
    return max(l.distance(p) for p in pts)


def inverted_line_residual(tri: Triangle, vertex: str, pts: List[Point]) -> float:
    """Invert ``pts`` about the vertex (power diameter^2); straightness residual / diameter."""
    t = tri.rotated(vertex)
    d = t.diameter
    inv = [invert_point(p, t.a, d * d) for p in pts]
    span = max(p.dist(q) for p in inv for q in inv)
    return line_fit_residual(inv) / max(span, d)
