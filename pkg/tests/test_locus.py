import cmath
import math

import pytest
from hypothesis import assume, given
from hypothesis import strategies as st

from conftest import P, close, triangles, vertices
from miquel.errors import (
    DegenerateOI,
    LineAlongSide,
    NearEquilateralDegeneracy,
    NearLine,
    SingularDenominator,
    TangentsParallel,
)
from miquel.geom import Line, Triangle, angle_between_lines, intersect_lines, midpoint
from miquel.locus import (
    LocusVerdict,
    auxiliary_data,
    brocard_angle,
    brocard_circle,
    brocard_point_residuals,
    brocard_points,
    cevians_through,
    closed_form_statement4,
    frame_line,
    frame_parameters,
    inverted_line_residual,
    isogonal_circle,
    isogonal_direction,
    isogonal_samples,
    locus_membership,
    normal_frame,
    omega_tan,
    parallel_antiparallel_check,
    perpendicularity_equivalence,
    second_brocard_triangle,
    statement4_image_line,
    symmedian_crosscheck,
    symmedian_line,
    theorem2_residuals,
)
from miquel.miquel_map import (
    CevianPair,
    admissibility,
    cevian_intersection,
    classify_cevians,
    forward_miquel,
    inverse_miquel,
)


def same_direction(l1, l2, tol=1e-12):
    return angle_between_lines(l1, l2) <= tol


# auxiliary circles and the main centre

def test_auxiliary_data_right_isosceles(t_iso):
    aux = auxiliary_data(t_iso, "A")
    assert close(aux.omega_ab.center, P(0, 1)) and aux.omega_ab.radius == pytest.approx(1)
    assert close(aux.omega_ac.center, P(1, 0)) and aux.omega_ac.radius == pytest.approx(1)
    assert close(aux.main_centre, P(1, 1), 1e-15)
    assert same_direction(aux.axis, Line.through(P(0, 0), P(1, 1)))


def test_equilateral_main_centre_is_circumcentre(t_eq):
    # tangent at A to AB and through C: the centre sits on the perpendicular to AB at A
    # and on the perpendicular bisector of AC; for the equilateral triangle both auxiliary
    # circles then meet again at the circumcentre, not at the midpoint of BC
    o = t_eq.circumcircle.center
    for v in "ABC":
        assert close(auxiliary_data(t_eq, v).main_centre, o, 1e-14)
    mid_bc = midpoint(t_eq.b, t_eq.c)
    assert auxiliary_data(t_eq, "A").omega_ab.gap(mid_bc) > 0.1


@given(triangles(), vertices)
def test_auxiliary_circles_tangent_and_through(tri, v):
    t = tri.rotated(v)
    aux = auxiliary_data(tri, v)
    d = t.diameter
    # tangency at A means the radius to A is perpendicular to AB
    assert abs((aux.omega_ab.center - t.a).unit().dot((t.b - t.a).unit())) <= 1e-9
    assert abs((aux.omega_ac.center - t.a).unit().dot((t.c - t.a).unit())) <= 1e-9
    for circle, p in ((aux.omega_ab, t.a), (aux.omega_ab, t.c), (aux.omega_ac, t.a), (aux.omega_ac, t.b)):
        assert circle.gap(p) <= 1e-9 * d
    i = aux.main_centre
    assert aux.omega_ab.gap(i) <= 1e-10 * d and aux.omega_ac.gap(i) <= 1e-10 * d
    assert i.dist(t.a) > 1e-6 * d


def test_aux_centres_examples(t413, t_iso):
    assert max(theorem2_residuals(t413, "A")) <= 1e-9
    with pytest.raises(DegenerateOI):
        theorem2_residuals(t_iso, "A")


@given(triangles(), vertices)
def test_aux_centres_property(tri, v):
    aux = auxiliary_data(tri, v)
    assume(aux.main_centre.dist(tri.circumcircle.center) > 1e-6 * tri.diameter)
    assert max(theorem2_residuals(tri, v)) <= 1e-9


# Brocard family

def test_second_brocard_triangle_right_isosceles(t_iso):
    ia, ib, ic = second_brocard_triangle(t_iso)
    assert close(ia, P(1, 1), 1e-15)
    a, b, c = t_iso.vertices
    assert close(ib, auxiliary_data(Triangle(b, c, a), "A").main_centre, 1e-15)
    assert close(ic, auxiliary_data(Triangle(c, a, b), "A").main_centre, 1e-15)


def test_brocard_circle_passes_through_o(t413):
    w = brocard_circle(t413)
    assert w.gap(t413.circumcircle.center) <= 1e-9


def test_equilateral_degeneracies(t_eq):
    with pytest.raises(NearEquilateralDegeneracy):
        brocard_circle(t_eq)
    p1, p2 = brocard_points(t_eq)
    o = t_eq.circumcircle.center
    assert close(p1, o, 1e-12) and close(p2, o, 1e-12)


def test_brocard_points_and_angle(t413):
    p1, p2 = brocard_points(t413)
    assert p1.dist(p2) > 1e-3
    assert max(brocard_point_residuals(t413)) <= 1e-9
    # independent oracle: cot w = cot A + cot B + cot C
    cot = sum(1 / math.tan(t413.angle(v)) for v in "ABC")
    assert brocard_angle(t413, p1) == pytest.approx(math.atan(1 / cot), abs=1e-12)
    assert brocard_angle(t413, p2) == pytest.approx(math.atan(1 / cot), abs=1e-12)


@given(triangles(min_angle_deg=8))
def test_brocard_properties(tri):
    sides = sorted([tri.b.dist(tri.c), tri.a.dist(tri.c), tri.a.dist(tri.b)])
    assume(min(sides[1] - sides[0], sides[2] - sides[1]) > 1e-2 * sides[2])
    assert brocard_circle(tri).gap(tri.circumcircle.center) <= 1e-9 * tri.circumcircle.radius
    r1, r2 = brocard_point_residuals(tri)
    assert max(r1, r2) <= 1e-9
    p1, p2 = brocard_points(tri)
    assert abs(brocard_angle(tri, p1) - brocard_angle(tri, p2)) <= 1e-9


# symmedian and the axis

def test_symmedian_examples(t413, t_iso):
    assert same_direction(symmedian_line(t413, "A"), Line.through(P(0, 0), P(7, 6)))
    with pytest.raises(TangentsParallel):
        omega_tan(t_iso, "A")
    assert same_direction(symmedian_line(t_iso, "A"), Line.through(P(0, 0), P(1, 1)))


@given(triangles(), vertices)
def test_axis_is_symmedian(tri, v):
    assert angle_between_lines(auxiliary_data(tri, v).axis, symmedian_line(tri, v)) <= 1e-10
    assert symmedian_crosscheck(tri, v) <= 1e-9


# internal-cevian locus

def test_locus_examples(t_iso):
    assert locus_membership(t_iso, "A", P(0.3, 0.3)) is LocusVerdict.EXCLUDED_IN_BOTH_AUX_DISKS
    assert locus_membership(t_iso, "A", P(3, 3)) is LocusVerdict.EXCLUDED_OUTSIDE_CIRCUMDISK
    assert locus_membership(t_iso, "A", P(1.3, 1.3)) is LocusVerdict.MEMBER
    assert locus_membership(t_iso, "A", P(1, 0)) is LocusVerdict.INADMISSIBLE
    assert locus_membership(t_iso, "A", P(1 + math.sqrt(2), 1)) is LocusVerdict.BOUNDARY


def test_point_in_one_aux_disk_is_not_a_member(t_iso):
    # (1.5, 0.3) is inside the circumdisk and inside only the disk of ((1,0),1);
    # the inverse map gives B_A beyond A on line AC, so it is not in the locus
    p = P(1.5, 0.3)
    assert P(1.5, 0.3).dist(P(1, 0)) < 1 < P(1.5, 0.3).dist(P(0, 1))
    cev = inverse_miquel(t_iso, "A", p)
    assert cev.t_b == pytest.approx(-1.1, abs=1e-12)
    assert cev.t_c == pytest.approx(0.58, abs=1e-12)
    assert classify_cevians(cev) == ("external", "internal")
    assert locus_membership(t_iso, "A", p) is LocusVerdict.EXCLUDED_IN_ONE_AUX_DISK


@given(triangles(), vertices, st.floats(-1.5, 1.5), st.floats(-1.5, 1.5))
def test_locus_matches_inverse_map(tri, v, u, w):
    w0 = tri.rotated(v).circumcircle
    p = w0.center + P(u, w) * w0.radius
    verdict = locus_membership(tri, v, p, band=1e-6 * tri.diameter)
    assume(verdict not in (LocusVerdict.BOUNDARY, LocusVerdict.INADMISSIBLE))
    internal = classify_cevians(inverse_miquel(tri, v, p)) == ("internal", "internal")
    assert (verdict is LocusVerdict.MEMBER) == internal


# perpendicular and antiparallel cevians

def test_omega_tan_example(t413):
    w = omega_tan(t413, "A")
    assert close(w.center, P(7, 6), 1e-12) and w.radius == pytest.approx(3 * math.sqrt(5), abs=1e-12)


@given(triangles(), vertices)
def test_omega_tan_deltoid(tri, v):
    t = tri.rotated(v)
    assume(abs(t.angle("A") - math.pi / 2) > 1e-2)
    c = omega_tan(tri, v).center
    assert abs(c.dist(t.b) - c.dist(t.c)) <= 1e-12 * max(1.0, c.dist(t.b))


def test_right_angle_perpendicularity_falls_back_to_bc(t345):
    cev = inverse_miquel(t345, "A", P(2, 1.5))
    gaps = perpendicularity_equivalence(t345, "A", cev)
    assert gaps.cevian_angle_gap <= 1e-12 and gaps.degenerate_line


def test_perpendicular_cevians_on_omega_tan(t413):
    a, b, c = t413.vertices
    n = midpoint(b, c) + P(0, 0.5 * b.dist(c))  # on the circle with diameter BC
    gaps = perpendicularity_equivalence(t413, "A", cevians_through(t413, "A", n))
    assert gaps.cevian_angle_gap <= 1e-12 and gaps.omega_tan_gap <= 1e-9


def test_sixty_degree_cevians_miss_omega_tan(t413):
    a, b, c = t413.vertices
    d1 = P(math.cos(2.0), math.sin(2.0))
    n = intersect_lines(Line(b, d1), Line(c, d1.rotated(math.pi / 3)))
    gaps = perpendicularity_equivalence(t413, "A", cevians_through(t413, "A", n))
    assert abs(gaps.cevian_angle_gap - math.pi / 6) <= 1e-12
    assert gaps.omega_tan_gap > 1e-3


@given(triangles(acute_a=True), st.floats(0, 2 * math.pi))
def test_perpendicular_converse(tri, theta):
    p = omega_tan(tri, "A").point_at(theta)
    assume(admissibility(tri, "A", p, 1e-3) is None)
    gaps = perpendicularity_equivalence(tri, "A", inverse_miquel(tri, "A", p))
    assert gaps.cevian_angle_gap <= 1e-8


def test_equal_parameters_give_symmedian_points(t413):
    par, sym = parallel_antiparallel_check(t413, "A", CevianPair(0.3, 0.3))
    assert par <= 1e-12 and sym <= 1e-9
    par, sym = parallel_antiparallel_check(t413, "A", CevianPair(0.3, 0.7))
    assert par > 1e-3 and sym > 1e-3
    cfg = forward_miquel(t413, "A", CevianPair(0.5, 0.5))
    assert close(cfg.n, P(5 / 3, 1), 1e-14)
    assert symmedian_line(t413, "A").distance(cfg.m) <= 1e-9


@given(triangles(), vertices, st.floats(-2, 2))
def test_symmedian_points_give_parallel_bases(tri, v, s):
    p = symmedian_line(tri, v).at(s * tri.diameter)
    assume(admissibility(tri, v, p, 1e-3) is None)
    cev = inverse_miquel(tri, v, p)
    assert abs(cev.t_b - cev.t_c) <= 1e-8
    assert parallel_antiparallel_check(tri, v, cev)[0] <= 1e-8


# closed form in the normal frame

def test_closed_form_worked_example():
    r = math.sqrt(2) - 1
    b_a, c_a, n = closed_form_statement4(1.0, math.pi / 2, 1.0, math.pi / 4)
    assert abs(b_a - r) <= 1e-12 and abs(c_a - 1j * r) <= 1e-12
    expected = (1 - math.sqrt(2) / 2) * (1 + 1j)
    assert abs(n - expected) <= 1e-12
    # independent oracle: intersect B -> B_A and C -> C_A directly
    tri = Triangle(P(0, 0), P(0, 1), P(1, 0))
    oracle = intersect_lines(Line.through(P(0, 1), P(r, 0)), Line.through(P(1, 0), P(0, r)))
    assert abs(oracle.to_complex() - n) <= 1e-12
    line = statement4_image_line(tri, "A", math.pi / 4)
    assert line.distance(P(1, 1)) <= 1e-15
    assert same_direction(line, Line.from_angle(P(0, 0), math.pi / 4))
    assert line.distance(oracle) <= 1e-12


def test_closed_form_singularities():
    with pytest.raises(SingularDenominator, match=r"sin\(mu0-beta0\)"):
        closed_form_statement4(1.0, 1.0, 1.0, 1.0)
    with pytest.raises(SingularDenominator):
        closed_form_statement4(1.0, 1.0, 0.0, 0.5)


def test_image_line_along_side(t413):
    with pytest.raises(LineAlongSide):
        statement4_image_line(t413, "A", 0.0)


@given(triangles(), vertices, st.floats(-math.pi, math.pi), st.floats(0.2, 3.0))
def test_closed_form_matches_construction(tri, v, mu0, m):
    b0, beta0 = frame_parameters(tri, v)
    assume(min(abs(math.sin(mu0)), abs(math.sin(mu0 - beta0))) > 0.05)
    f = normal_frame(tri, v)
    p = f.to_world(m * cmath.exp(1j * mu0))
    assume(admissibility(tri, v, p, 1e-3) is None)
    n_geo = cevian_intersection(tri, v, inverse_miquel(tri, v, p))
    _, _, n_cf = closed_form_statement4(b0, beta0, m, mu0)
    assert abs(f.to_frame(n_geo) - n_cf) <= 1e-9 * max(1.0, abs(n_cf))
    line = statement4_image_line(tri, v, mu0)
    scale = max(tri.diameter, n_geo.dist(tri.rotated(v).a))
    assert line.distance(n_geo) <= 1e-9 * scale
    iso = isogonal_direction(tri, v, frame_line(tri, v, mu0))
    assert angle_between_lines(line, Line(line.anchor, iso)) <= 1e-9


# Miquel points over a line of cevian intersections

def test_isogonal_circle_generic(t413):
    l = frame_line(t413, "A", 1.0)
    circle = isogonal_circle(t413, "A", l)
    held = isogonal_samples(t413, "A", l, 10, offset=3)
    assert max(circle.gap(p) for p in held) <= 1e-8 * t413.diameter
    assert inverted_line_residual(t413, "A", held) <= 1e-8
    # the circle passes through A; its chord direction at A is the isogonal of l
    assert circle.gap(t413.a) <= 1e-9 * t413.diameter


def test_isogonal_circle_median_is_symmedian_line(t413):
    a, b, c = t413.vertices
    median = Line.through(a, midpoint(b, c))
    with pytest.raises(NearLine) as e:
        isogonal_circle(t413, "A", median)
    assert angle_between_lines(e.value.line, symmedian_line(t413, "A")) <= 1e-9
    assert e.value.line.distance(a) <= 1e-9 * t413.diameter
