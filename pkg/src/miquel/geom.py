"""Plane geometry primitives, constructions and tolerance-aware predicates."""
from __future__ import annotations

import math
from dataclasses import dataclass
from functools import cached_property, lru_cache
from typing import List, NamedTuple, Optional, Tuple

from .errors import (
    AllCollinear,
    CenterInversion,
    CoincidentCircles,
    CollinearInput,
    DegenerateRay,
    DegenerateTriangle,
    PointNotOnCircle,
    ThroughPointOnTangent,
)


@dataclass(frozen=True)
class Tolerance:
    absolute_eps: float = 1e-12
    relative_eps: float = 1e-9

    def __post_init__(self):
        if not (self.absolute_eps > 0 and self.relative_eps > 0):
            raise ValueError("tolerances must be positive")

    def eps(self, scale: float) -> float:
        """Effective length tolerance for a construction of diameter ``scale``."""
        return max(self.absolute_eps, self.relative_eps * scale)


DEFAULT_TOL = Tolerance()


class Point(NamedTuple):
    """Immutable plane point; a tuple subclass because it is built millions of times per sweep."""

    x: float
    y: float

    def __add__(self, o: Point) -> Point:
        return Point(self.x + o.x, self.y + o.y)

    def __sub__(self, o: Point) -> Point:
        return Point(self.x - o.x, self.y - o.y)

    def __mul__(self, s: float) -> Point:
        return Point(self.x * s, self.y * s)

    __rmul__ = __mul__

    def __truediv__(self, s: float) -> Point:
        return Point(self.x / s, self.y / s)

    def __neg__(self) -> Point:
        return Point(-self.x, -self.y)

    def dot(self, o: Point) -> float:
        return self.x * o.x + self.y * o.y

    def cross(self, o: Point) -> float:
        return self.x * o.y - self.y * o.x

    def norm(self) -> float:
        return math.hypot(self.x, self.y)

    def unit(self) -> Point:
        n = math.hypot(self.x, self.y)
        return Point(self.x / n, self.y / n)

    def perp(self) -> Point:
        """Rotate by +90 degrees."""
        return Point(-self.y, self.x)

    def rotated(self, theta: float) -> Point:
        c, s = math.cos(theta), math.sin(theta)
        return Point(c * self.x - s * self.y, s * self.x + c * self.y)

    def dist(self, o: Point) -> float:
        return math.hypot(self.x - o.x, self.y - o.y)

    def to_complex(self) -> complex:
        return complex(self.x, self.y)

    @classmethod
    def from_complex(cls, z: complex) -> Point:
        return cls(z.real, z.imag)


def midpoint(p: Point, q: Point) -> Point:
    return Point(0.5 * (p.x + q.x), 0.5 * (p.y + q.y))


@dataclass(frozen=True, slots=True)
class Line:
    """Oriented internally (anchor + unit direction); equality is up to sign."""

    anchor: Point
    direction: Point

    @classmethod
    def through(cls, p: Point, q: Point) -> Line:
        d = q - p
        n = d.norm()
        if n == 0.0:
            raise DegenerateRay("line through coincident points")
        return cls(p, d / n)

    @classmethod
    def from_angle(cls, anchor: Point, theta: float) -> Line:
        return cls(anchor, Point(math.cos(theta), math.sin(theta)))

    @property
    def normal(self) -> Point:
        return self.direction.perp()

    def param(self, p: Point) -> float:
        return (p - self.anchor).dot(self.direction)

    def at(self, s: float) -> Point:
        return self.anchor + self.direction * s

    def project(self, p: Point) -> Point:
        return self.at(self.param(p))

    def signed_distance(self, p: Point) -> float:
        """Positive on the left of the direction."""
        return self.direction.cross(p - self.anchor)

    def distance(self, p: Point) -> float:
        return abs(self.signed_distance(p))

    def contains(self, p: Point, tol: Tolerance = DEFAULT_TOL, scale: float = 1.0) -> bool:
        return self.distance(p) <= tol.eps(scale)

    def angle(self) -> float:
        return math.atan2(self.direction.y, self.direction.x)

    def same_as(self, other: Line, tol: Tolerance = DEFAULT_TOL, scale: float = 1.0) -> bool:
        return (angle_between_lines(self, other) <= tol.relative_eps
                and self.distance(other.anchor) <= tol.eps(scale))


def angle_between_lines(l1: Line, l2: Line) -> float:
    """Unsigned angle between two unoriented lines, in [0, pi/2]."""
    d1, d2 = l1.direction, l2.direction
    return math.atan2(abs(d1.cross(d2)), abs(d1.dot(d2)))


@dataclass(frozen=True, slots=True)
class Circle:
    center: Point
    radius: float

    def __post_init__(self):
        if not self.radius > 0:
            raise ValueError(f"circle radius must be positive, got {self.radius}")

    def gap(self, p: Point) -> float:
        """Distance from ``p`` to the circle itself."""
        return abs(self.center.dist(p) - self.radius)

    def signed_gap(self, p: Point) -> float:
        """Negative inside the disk, positive outside."""
        return self.center.dist(p) - self.radius

    def contains(self, p: Point, tol: Tolerance = DEFAULT_TOL) -> bool:
        return self.gap(p) <= tol.eps(2 * self.radius)

    def point_at(self, theta: float) -> Point:
        return Point(self.center.x + self.radius * math.cos(theta),
                     self.center.y + self.radius * math.sin(theta))


@dataclass(frozen=True)
class ParallelVerdict:
    kind: str  # "distinct" | "coincident"


def _cross3(p: Point, q: Point, r: Point) -> float:
    return (q.x - p.x) * (r.y - p.y) - (q.y - p.y) * (r.x - p.x)


def _diameter(*pts: Point) -> float:
    if len(pts) == 3:
        a, b, c = pts
        return max(a.dist(b), b.dist(c), a.dist(c))
    return max(p.dist(q) for i, p in enumerate(pts) for q in pts[i + 1:])


def orientation(p: Point, q: Point, r: Point, tol: Tolerance = DEFAULT_TOL) -> int:
    """Sign of the signed area of (p, q, r); zero inside the tolerance band.

    The determinant is compared against ``tol.eps(d) * d`` with ``d`` the
    diameter of the triple, which keeps the test scale invariant.
    """
    det = _cross3(p, q, r)
    d = _diameter(p, q, r)
    if abs(det) <= tol.eps(d) * d:
        return 0
    return 1 if det > 0 else -1


@dataclass(frozen=True)
class Triangle:
    a: Point
    b: Point
    c: Point

    def __post_init__(self):
        if orientation(self.a, self.b, self.c) == 0:
            raise DegenerateTriangle("degenerate triangle")

    @cached_property
    def diameter(self) -> float:
        return _diameter(self.a, self.b, self.c)

    @cached_property
    def circumcircle(self) -> Circle:
        return circumcircle(self.a, self.b, self.c)

    @property
    def vertices(self) -> Tuple[Point, Point, Point]:
        return self.a, self.b, self.c

    def ccw(self) -> bool:
        return _cross3(self.a, self.b, self.c) > 0

    def rotated(self, vertex: str) -> Triangle:
        """Relabel so that ``vertex`` plays the role of A (cyclic rotation)."""
        if vertex == "A":
            return self
        return _rotate(self, vertex)

    def angle(self, vertex: str = "A") -> float:
        t = self.rotated(vertex)
        return angle_at(t.a, t.b, t.c)


VERTICES = ("A", "B", "C")


@lru_cache(maxsize=256)
def _rotate(tri: Triangle, vertex: str) -> Triangle:
    if vertex == "A":
        return tri
    if vertex == "B":
        return Triangle(tri.b, tri.c, tri.a)
    if vertex == "C":
        return Triangle(tri.c, tri.a, tri.b)
    raise ValueError(f"vertex must be one of A, B, C, got {vertex!r}")


def circumcircle(p: Point, q: Point, r: Point, tol: Tolerance = DEFAULT_TOL) -> Circle:
    lp, lq, lr = q.dist(r), p.dist(r), p.dist(q)
    d = max(lp, lq, lr)
    # same test as orientation(), reusing the side lengths
    if abs(_cross3(p, q, r)) <= tol.eps(d) * d:
        raise CollinearInput("collinear points have no circumcircle")
    # pivot on the vertex shared by the two shortest sides
    if lp >= lq and lp >= lr:
        o, u, v = p, q - p, r - p
    elif lq >= lr:
        o, u, v = q, r - q, p - q
    else:
        o, u, v = r, p - r, q - r
    uu, vv = u.dot(u), v.dot(v)
    den = 2.0 * u.cross(v)
    off = Point((v.y * uu - u.y * vv) / den, (u.x * vv - v.x * uu) / den)
    return Circle(o + off, off.norm())


def intersect_lines(l1: Line, l2: Line, tol: Tolerance = DEFAULT_TOL):
    """Return the intersection point, or a ParallelVerdict."""
    den = l1.direction.cross(l2.direction)
    w = l2.anchor - l1.anchor
    if abs(den) <= tol.relative_eps:
        if abs(l1.direction.cross(w)) <= tol.eps(w.norm()):
            return ParallelVerdict("coincident")
        return ParallelVerdict("distinct")
    s = w.cross(l2.direction) / den
    return l1.at(s)


def intersect_circle_line(c: Circle, l: Line, tol: Tolerance = DEFAULT_TOL
                          ) -> Tuple[List[Point], bool]:
    """Points ordered along the line direction, and a tangency flag."""
    s0 = l.param(c.center)
    foot = l.at(s0)
    h = c.center.dist(foot)
    eps = tol.eps(2 * c.radius)
    if abs(h - c.radius) <= eps:
        return [foot], True
    if h > c.radius:
        return [], False
    half = math.sqrt((c.radius - h) * (c.radius + h))
    return [l.at(s0 - half), l.at(s0 + half)], False


def intersect_circles(c1: Circle, c2: Circle, tol: Tolerance = DEFAULT_TOL
                      ) -> Tuple[List[Point], bool]:
    """Points (left of c1->c2 first) and a tangency flag."""
    dvec = c2.center - c1.center
    d = dvec.norm()
    eps = tol.eps(2 * max(c1.radius, c2.radius))
    if d <= eps:
        if abs(c1.radius - c2.radius) <= eps:
            raise CoincidentCircles("circles coincide")
        return [], False
    r1, r2 = c1.radius, c2.radius
    u = dvec / d
    if abs(d - (r1 + r2)) <= eps or abs(d - abs(r1 - r2)) <= eps:
        a = (d * d + r1 * r1 - r2 * r2) / (2 * d)
        return [c1.center + u * a], True
    if d > r1 + r2 or d < abs(r1 - r2):
        return [], False
    a = (d * d + r1 * r1 - r2 * r2) / (2 * d)
    h = math.sqrt(max(r1 * r1 - a * a, 0.0))
    base = c1.center + u * a
    n = u.perp()
    return [base + n * h, base - n * h], False


def tangent_line_at(c: Circle, p: Point, tol: Tolerance = DEFAULT_TOL) -> Line:
    if not c.contains(p, tol):
        raise PointNotOnCircle(f"gap {c.gap(p):.3g}")
    return Line(p, (p - c.center).unit().perp())


def tangent_circle_through(tangent: Line, touch: Point, through: Point,
                           tol: Tolerance = DEFAULT_TOL) -> Circle:
    """Circle tangent to ``tangent`` at ``touch`` that passes through ``through``."""
    n = tangent.normal
    w = through - touch
    wn = w.dot(n)
    if abs(wn) <= tol.eps(w.norm()):
        raise ThroughPointOnTangent("through point lies on the tangent line")
    s = w.dot(w) / (2.0 * wn)
    return Circle(touch + n * s, abs(s))


def invert_point(p: Point, center: Point, power: float, tol: Tolerance = DEFAULT_TOL) -> Point:
    v = p - center
    d2 = v.dot(v)
    if math.sqrt(d2) <= tol.eps(math.sqrt(abs(power))):
        raise CenterInversion("point coincides with the inversion centre")
    return center + v * (power / d2)


def angle_at(vertex: Point, p: Point, q: Point, tol: Tolerance = DEFAULT_TOL) -> float:
    u, w = p - vertex, q - vertex
    nu, nw = u.norm(), w.norm()
    if min(nu, nw) <= tol.eps(max(nu, nw)):
        raise DegenerateRay("ray of zero length")
    return math.atan2(abs(u.cross(w)), u.dot(w))


def reflect_point_about_line(p: Point, l: Line) -> Point:
    f = l.project(p)
    return Point(2 * f.x - p.x, 2 * f.y - p.y)


def concyclic_residual(p1: Point, p2: Point, p3: Point, p4: Point,
                       tol: Tolerance = DEFAULT_TOL) -> float:
    """Worst leave-one-out distance to the circle of the other three, over the diameter.

    Collinear triples are skipped; zero iff the points are concyclic.
    """
    pts = (p1, p2, p3, p4)
    d = _diameter(*pts)
    worst: Optional[float] = None
    for i in range(4):
        rest = [p for j, p in enumerate(pts) if j != i]
        try:
            c = circumcircle(*rest, tol=tol)
        except CollinearInput:
            continue
        g = c.gap(pts[i]) / d
        worst = g if worst is None else max(worst, g)
    if worst is None:
        raise AllCollinear("all four points are collinear")
    return worst


def bounding_diameter(*pts: Point) -> float:
    return _diameter(*pts)
