import math

import pytest
from hypothesis import assume, given
from hypothesis import strategies as st

from conftest import P, close, points
from miquel.errors import AllCollinear, CoincidentCircles, CollinearInput, DegenerateTriangle, ThroughPointOnTangent
from miquel.geom import (
    Circle,
    Line,
    ParallelVerdict,
    Tolerance,
    Triangle,
    angle_at,
    circumcircle,
    concyclic_residual,
    intersect_circle_line,
    intersect_circles,
    intersect_lines,
    invert_point,
    orientation,
    reflect_point_about_line,
    tangent_circle_through,
    tangent_line_at,
)

X_AXIS = Line.through(P(0, 0), P(1, 0))
Y_AXIS = Line.through(P(0, 0), P(0, 1))


def test_tolerance_policy():
    tol = Tolerance()
    assert (tol.absolute_eps, tol.relative_eps) == (1e-12, 1e-9)
    assert tol.eps(1e-6) == 1e-12
    assert tol.eps(10.0) == pytest.approx(1e-8)
    with pytest.raises(ValueError):
        Tolerance(0.0, 1e-9)


@pytest.mark.parametrize("pts, sign", [
    ((P(0, 0), P(1, 0), P(0, 1)), 1),
    ((P(0, 0), P(1, 0), P(2, 0)), 0),
    ((P(0, 0), P(0, 1), P(1, 0)), -1),
])
def test_orientation(pts, sign):
    assert orientation(*pts) == sign


def test_orientation_is_scale_invariant():
    base = (P(0, 0), P(1, 0), P(0.5, 1e-10))
    for s in (1e-6, 1.0, 1e6):
        assert orientation(*(p * s for p in base)) == 0
    assert orientation(P(0, 0), P(1, 0), P(0.5, 1e-6)) == 1


def test_triangle_rejects_collinear():
    with pytest.raises(DegenerateTriangle):
        Triangle(P(0, 0), P(1, 0), P(2, 0))


def test_circumcircle_examples():
    c = circumcircle(P(0, 0), P(2, 0), P(0, 2))
    assert close(c.center, P(1, 1)) and c.radius == pytest.approx(math.sqrt(2), abs=1e-12)
    c = circumcircle(P(0, 0), P(4, 0), P(1, 3))
    assert close(c.center, P(2, 1)) and c.radius == pytest.approx(math.sqrt(5), abs=1e-12)
    with pytest.raises(CollinearInput):
        circumcircle(P(0, 0), P(1, 0), P(2, 0))


def test_circumcircle_needle_triangle():
    # apex far above a tiny base: centre is on x = 0.5e-6 at height where distances agree
    a, b, c = P(0, 0), P(1e-6, 0), P(0.5e-6, 1.0)
    w = circumcircle(a, b, c)
    for p in (a, b, c):
        assert abs(w.center.dist(p) - w.radius) <= 1e-12 * w.radius


def test_intersect_lines_examples():
    assert close(intersect_lines(X_AXIS, Y_AXIS), P(0, 0))
    n = intersect_lines(Line.through(P(4, 0), P(0, -7 / 6)), Line.through(P(0, 3), P(7 / 8, 0)))
    assert close(n, P(1.12, -0.84), 1e-12)
    v = intersect_lines(X_AXIS, Line.through(P(0, 1), P(1, 1)))
    assert isinstance(v, ParallelVerdict) and v.kind == "distinct"
    v = intersect_lines(X_AXIS, Line.through(P(5, 0), P(-1, 0)))
    assert isinstance(v, ParallelVerdict) and v.kind == "coincident"


def test_intersect_circle_line_examples():
    unit = Circle(P(0, 0), 1.0)
    pts, tangent = intersect_circle_line(unit, X_AXIS)
    assert sorted((round(p.x, 12), round(p.y, 12)) for p in pts) == [(-1, 0), (1, 0)] and not tangent
    pts, tangent = intersect_circle_line(unit, Line.through(P(0, 1), P(1, 1)))
    assert len(pts) == 1 and close(pts[0], P(0, 1)) and tangent
    pts, _ = intersect_circle_line(unit, Line.through(P(0, 2), P(1, 2)))
    assert pts == []


def test_intersect_circles_examples():
    pts, tangent = intersect_circles(Circle(P(0, 1), 1.0), Circle(P(1, 0), 1.0))
    assert sorted((round(p.x, 12) + 0.0, round(p.y, 12) + 0.0) for p in pts) == [(0, 0), (1, 1)]
    assert not tangent
    pts, tangent = intersect_circles(Circle(P(0, 0), 1.0), Circle(P(2, 0), 1.0))
    assert len(pts) == 1 and close(pts[0], P(1, 0)) and tangent
    assert intersect_circles(Circle(P(0, 0), 1.0), Circle(P(4, 0), 1.0))[0] == []
    with pytest.raises(CoincidentCircles):
        intersect_circles(Circle(P(0, 0), 1.0), Circle(P(0, 0), 1.0))


def _on_line(l, a, b, c):
    # line a x + b y = c
    return abs(a * l.anchor.x + b * l.anchor.y - c) < 1e-12 and abs(a * l.direction.x + b * l.direction.y) < 1e-12


def test_tangent_line_at_examples():
    w = Circle(P(2, 1), math.sqrt(5))
    assert _on_line(tangent_line_at(w, P(4, 0)), 2, -1, 8)
    assert _on_line(tangent_line_at(w, P(1, 3)), -1, 2, 5)
    assert _on_line(tangent_line_at(Circle(P(0, 0), 1.0), P(1, 0)), 1, 0, 1)


def test_tangent_circle_through_examples():
    c = tangent_circle_through(X_AXIS, P(0, 0), P(0, 2))
    assert close(c.center, P(0, 1)) and c.radius == pytest.approx(1.0)
    c = tangent_circle_through(Y_AXIS, P(0, 0), P(2, 0))
    assert close(c.center, P(1, 0)) and c.radius == pytest.approx(1.0)
    with pytest.raises(ThroughPointOnTangent):
        tangent_circle_through(X_AXIS, P(0, 0), P(3, 0))


def test_invert_point_examples():
    o = P(0, 0)
    assert close(invert_point(P(2, 0), o, 1.0), P(0.5, 0))
    assert close(invert_point(P(0.5, 0), o, 1.0), P(2, 0))
    assert close(invert_point(P(1, 1), o, 2.0), P(1, 1))


@pytest.mark.parametrize("q, expected", [((0, 1), math.pi / 2), ((1, 1), math.pi / 4), ((-1, 0), math.pi)])
def test_angle_at(q, expected):
    assert angle_at(P(0, 0), P(1, 0), P(*q)) == pytest.approx(expected, abs=1e-15)


def test_reflect_examples():
    assert close(reflect_point_about_line(P(1, 2), X_AXIS), P(1, -2))
    assert close(reflect_point_about_line(P(3, 0), Line.through(P(0, 0), P(1, 1))), P(0, 3))
    assert close(reflect_point_about_line(P(5, 0), X_AXIS), P(5, 0))


def test_concyclic_residual_examples():
    assert concyclic_residual(P(1, 0), P(0, 1), P(-1, 0), P(0, -1)) <= 1e-15
    assert concyclic_residual(P(1, 0), P(0, 1), P(-1, 0), P(0, -1.5)) > 0.05
    assert concyclic_residual(P(0, 0), P(4, 0), P(0, -2), P(1, 1)) <= 1e-15
    with pytest.raises(AllCollinear):
        concyclic_residual(P(0, 0), P(1, 0), P(2, 0), P(3, 0))


# properties

@given(points, points, points)
def test_circumcircle_equidistant(a, b, c):
    try:
        w = circumcircle(a, b, c)
    except CollinearInput:
        return
    for p in (a, b, c):
        assert abs(w.center.dist(p) - w.radius) <= 1e-12 * w.radius + 1e-12


@given(points, points, st.floats(0.1, 5), st.floats(0.1, 5))
def test_circle_intersections_lie_on_both(c1, c2, r1, r2):
    assume(c1.dist(c2) > 1e-6)
    pts, _ = intersect_circles(Circle(c1, r1), Circle(c2, r2))
    for p in pts:
        assert abs(p.dist(c1) - r1) <= 1e-8 * (1 + r1)
        assert abs(p.dist(c2) - r2) <= 1e-8 * (1 + r2)


@given(st.floats(1e-3, 1e3), st.floats(0, 2 * math.pi), st.floats(0.1, 10))
def test_inversion_involution(dist, theta, power):
    # centre-relative coordinates: the 1e-12 bound is then limited only by rounding of the map itself
    o = P(0, 0)
    p = P(math.cos(theta), math.sin(theta)) * dist
    back = invert_point(invert_point(p, o, power), o, power)
    assert back.dist(p) <= 1e-12 * dist


@given(points, st.floats(1e-3, 1e3), st.floats(0, 2 * math.pi), st.floats(0.1, 10))
def test_inversion_involution_offset_centre(center, dist, theta, power):
    # the intermediate image is stored in absolute coordinates, so its rounding is
    # eps * |center| and gets magnified by |p - center| / |image - center|
    p = center + P(math.cos(theta), math.sin(theta)) * dist
    q = invert_point(p, center, power)
    back = invert_point(q, center, power)
    cond = 1 + (center.norm() + p.norm()) / q.dist(center)
    assert back.dist(p) <= 8 * 2.0 ** -52 * cond * dist


@given(points, points, points)
def test_reflection_involution(p, a, b):
    assume(a.dist(b) > 1e-3)
    l = Line.through(a, b)
    q = reflect_point_about_line(p, l)
    scale = 1 + p.norm() + a.norm()
    assert reflect_point_about_line(q, l).dist(p) <= 1e-12 * scale
    assert abs(l.distance(q) - l.distance(p)) <= 1e-12 * scale


@given(points, st.floats(0, math.pi), st.floats(0.05, 5), st.floats(0.1, math.pi - 0.1))
def test_tangent_circle_is_tangent(touch, phi, r, alpha):
    tangent = Line.from_angle(touch, phi)
    through = touch + P(math.cos(phi + alpha), math.sin(phi + alpha)) * r
    c = tangent_circle_through(tangent, touch, through)
    pts, is_tangent = intersect_circle_line(c, tangent)
    assert is_tangent and len(pts) == 1
    assert pts[0].dist(touch) <= 1e-6 * (1 + c.radius)
