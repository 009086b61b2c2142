"""Seeded property suites.

A property pairs a scene generator with a per-scene residual; a run reports the
worst residual and, on failure, the offending scene so it can be replayed with
``miquel check <suite> --scene <file>``.
"""
from __future__ import annotations

import math
import time
from dataclasses import dataclass
from typing import Callable, Dict, Iterator, List, Optional

import numpy as np

from .centers import CENTER_KINDS, center_case, classic_center
from .errors import DegenerateOI, GeometryError, UnknownSuite
from .geom import Line, Point, Triangle, angle_between_lines, circumcircle, intersect_lines, midpoint
from .locus import (
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
    locus_membership,
    isogonal_circle,
    isogonal_direction,
    isogonal_samples,
    normal_frame,
    omega_tan,
    parallel_antiparallel_check,
    perpendicularity_equivalence,
    statement4_image_line,
    symmedian_line,
    theorem2_residuals,
)
from .miquel_map import (
    CevianPair,
    admissibility,
    cevian_intersection,
    classify_cevians,
    forward_miquel,
    inverse_miquel,
    side_lemma_check,
)
from .sampling import random_admissible_point, random_cevians, random_triangle
from .scene import Scene, SweepSpec
from .sweep import SKIPPED, default_box, sample_points, sweep_row

Generator = Callable[[np.random.Generator, int], Iterator[Scene]]
Evaluator = Callable[[Scene], Optional[float]]


@dataclass(frozen=True)
class Property:
    name: str
    threshold: float
    generate: Generator
    evaluate: Evaluator
    samples: int
    payload: str  # scene payload the evaluator expects


@dataclass(frozen=True)
class PropertyResult:
    name: str
    threshold: float
    worst: float
    passed: bool
    evaluated: int
    skipped: int
    elapsed: float
    worst_scene: Optional[Scene]

    def line(self) -> str:
        tag = "PASS" if self.passed else "FAIL"
        return (f"{tag} {self.name}: worst={self.worst:.3e} threshold={self.threshold:.1e} "
                f"n={self.evaluated} skipped={self.skipped}")


def _cev(scene: Scene) -> CevianPair:
    return CevianPair(*scene.cevians)


def _vertex(rng) -> str:
    return "ABC"[int(rng.integers(3))]


# four-circle concurrency

def gen_concurrency(rng, n):
    for _ in range(n):
        tri = random_triangle(rng)
        v = _vertex(rng)
        cev = random_cevians(rng, tri, v)
        yield Scene(tri, v, cevians=(cev.t_b, cev.t_c))


def eval_concurrency(scene):
    return forward_miquel(scene.triangle, scene.vertex, _cev(scene), scene.tolerance).residual


# bijection round trips

def gen_roundtrip_point(rng, n):
    for _ in range(n):
        tri = random_triangle(rng)
        v = _vertex(rng)
        yield Scene(tri, v, point=random_admissible_point(rng, tri, v, margin=1e-6))


def eval_roundtrip_point(scene):
    tri, v, m = scene.triangle, scene.vertex, scene.point
    cfg = forward_miquel(tri, v, inverse_miquel(tri, v, m, scene.tolerance, margin=1e-7), scene.tolerance)
    a = tri.rotated(v).a
    return cfg.m.dist(m) / max(tri.diameter, m.dist(a))


def eval_roundtrip_cevians(scene):
    tri, v, cev = scene.triangle, scene.vertex, _cev(scene)
    back = inverse_miquel(tri, v, forward_miquel(tri, v, cev, scene.tolerance).m, scene.tolerance, margin=0.0)
    return max(abs(back.t_b - cev.t_b), abs(back.t_c - cev.t_c))


# locus of internal cevians

LOCUS_MARGIN = 1e-6
LOCUS_TRIANGLES = 20


def gen_locus_agreement(rng, n):
    per = max(1, n // LOCUS_TRIANGLES)
    for _ in range(LOCUS_TRIANGLES):
        tri = random_triangle(rng)
        v = _vertex(rng)
        spec = SweepSpec(default_box(tri, v), samples=per, margin=LOCUS_MARGIN,
                         seed=int(rng.integers(2**32)))
        produced = 0
        while produced < per:
            for p in sample_points(tri, v, spec):
                band = LOCUS_MARGIN * tri.diameter
                if locus_membership(tri, v, p, band=band) in SKIPPED:
                    continue
                yield Scene(tri, v, point=p)
                produced += 1
                if produced == per:
                    break
            spec = SweepSpec(spec.box, spec.samples, spec.margin, spec.seed + 1)


def eval_locus_agreement(scene):
    row = sweep_row(scene.triangle, scene.vertex, scene.point, LOCUS_MARGIN, scene.tolerance)
    if row.agree is None:
        return None
    return 0.0 if row.agree else 1.0


# Brocard family

def gen_triangles(rng, n):
    for _ in range(n):
        tri = random_triangle(rng)
        yield Scene(tri, _vertex(rng), center="circumcenter")


def gen_scalene(rng, n):
    for _ in range(n):
        yield Scene(random_triangle(rng, scalene_gap=0.01), "A", center="circumcenter")


def eval_aux_centres(scene):
    tri, v = scene.triangle, scene.vertex
    i_a = auxiliary_data(tri, v).main_centre
    if i_a.dist(tri.circumcircle.center) <= 1e-6 * tri.diameter:
        return None
    try:
        return max(theorem2_residuals(tri, v, scene.tolerance))
    except DegenerateOI:
        return None


def eval_main_centres(scene):
    tri = scene.triangle
    w = brocard_circle(tri, scene.tolerance)
    return w.gap(tri.circumcircle.center) / tri.circumcircle.radius


def eval_miquel_axis(scene):
    tri, v = scene.triangle, scene.vertex
    return angle_between_lines(auxiliary_data(tri, v, scene.tolerance).axis,
                               symmedian_line(tri, v, scene.tolerance))


def eval_brocard_points(scene):
    tri = scene.triangle
    r1, r2 = brocard_point_residuals(tri, scene.tolerance)
    p1, p2 = brocard_points(tri, scene.tolerance)
    return max(r1, r2, abs(brocard_angle(tri, p1) - brocard_angle(tri, p2)))


# special loci

def gen_perpendicular_forward(rng, n):
    made = 0
    while made < n:
        tri = random_triangle(rng, acute_vertex=True)
        v = "A"
        t = tri.rotated(v)
        mid, r = midpoint(t.b, t.c), 0.5 * t.b.dist(t.c)
        th = rng.uniform(0, 2 * math.pi)
        nn = Point(mid.x + r * math.cos(th), mid.y + r * math.sin(th))
        try:
            cev = cevians_through(tri, v, nn)
        except GeometryError:
            continue
        if min(abs(cev.t_b), abs(cev.t_b - 1), abs(cev.t_c), abs(cev.t_c - 1)) < 1e-3:
            continue
        made += 1
        yield Scene(tri, v, cevians=(cev.t_b, cev.t_c))


def eval_perpendicular_forward(scene):
    return perpendicularity_equivalence(scene.triangle, scene.vertex, _cev(scene), scene.tolerance).omega_tan_gap


def gen_perpendicular_converse(rng, n):
    made = 0
    while made < n:
        tri = random_triangle(rng, acute_vertex=True)
        p = omega_tan(tri, "A").point_at(rng.uniform(0, 2 * math.pi))
        if admissibility(tri, "A", p, 1e-3) is not None:
            continue
        made += 1
        yield Scene(tri, "A", point=p)


def eval_perpendicular_converse(scene):
    tri, v = scene.triangle, scene.vertex
    cev = inverse_miquel(tri, v, scene.point, scene.tolerance, margin=1e-7)
    return perpendicularity_equivalence(tri, v, cev, scene.tolerance).cevian_angle_gap


def gen_symmedian_forward(rng, n):
    made = 0
    while made < n:
        tri = random_triangle(rng)
        t = float(rng.uniform(-3, 4))
        if min(abs(t), abs(t - 1)) < 1e-3:
            continue
        made += 1
        yield Scene(tri, _vertex(rng), cevians=(t, t))


def eval_symmedian_forward(scene):
    return parallel_antiparallel_check(scene.triangle, scene.vertex, _cev(scene), scene.tolerance)[1]


def gen_symmedian_converse(rng, n):
    made = 0
    while made < n:
        tri = random_triangle(rng)
        v = _vertex(rng)
        p = symmedian_line(tri, v).at(rng.uniform(-2, 2) * tri.diameter)
        if admissibility(tri, v, p, 1e-3) is not None:
            continue
        made += 1
        yield Scene(tri, v, point=p)


def eval_symmedian_converse(scene):
    tri, v = scene.triangle, scene.vertex
    cev = inverse_miquel(tri, v, scene.point, scene.tolerance, margin=1e-7)
    return parallel_antiparallel_check(tri, v, cev, scene.tolerance)[0]


def gen_fixed_direction(rng, n):
    made = 0
    while made < n:
        tri = random_triangle(rng)
        v = _vertex(rng)
        _, beta0 = frame_parameters(tri, v)
        mu0 = float(rng.uniform(-math.pi, math.pi))
        if min(abs(math.sin(mu0)), abs(math.sin(mu0 - beta0))) < 0.05:
            continue
        m = float(rng.uniform(0.2, 3.0))
        p = normal_frame(tri, v).to_world(m * complex(math.cos(mu0), math.sin(mu0)))
        if admissibility(tri, v, p, 1e-3) is not None:
            continue
        made += 1
        yield Scene(tri, v, point=p)


def _fixed_direction_parts(scene):
    tri, v = scene.triangle, scene.vertex
    f = normal_frame(tri, v)
    z = f.to_frame(scene.point)
    m, mu0 = abs(z), math.atan2(z.imag, z.real)
    b0, beta0 = frame_parameters(tri, v)
    n_geo = cevian_intersection(tri, v, inverse_miquel(tri, v, scene.point, scene.tolerance), scene.tolerance)
    return tri, v, f, m, mu0, b0, beta0, n_geo


def eval_fixed_direction_closed_form(scene):
    tri, v, f, m, mu0, b0, beta0, n_geo = _fixed_direction_parts(scene)
    _, _, n_cf = closed_form_statement4(b0, beta0, m, mu0)
    zn = f.to_frame(n_geo)
    return abs(zn - n_cf) / max(1.0, abs(n_cf))


def eval_fixed_direction_line(scene):
    tri, v, f, m, mu0, b0, beta0, n_geo = _fixed_direction_parts(scene)
    img = statement4_image_line(tri, v, mu0, scene.tolerance)
    scale = max(tri.diameter, n_geo.dist(tri.rotated(v).a))
    iso = isogonal_direction(tri, v, frame_line(tri, v, mu0))
    return max(img.distance(n_geo) / scale, angle_between_lines(img, Line(img.anchor, iso)))


def gen_fixed_angle_circle(rng, n):
    made = 0
    while made < n:
        tri = random_triangle(rng)
        v = _vertex(rng)
        t = tri.rotated(v)
        _, beta0 = frame_parameters(tri, v)
        mu = float(rng.uniform(0, math.pi))
        l = frame_line(tri, v, mu)
        median = Line.through(t.a, midpoint(t.b, t.c))
        if min(abs(math.sin(mu)), abs(math.sin(mu - beta0)), angle_between_lines(l, median)) < 0.05:
            continue
        made += 1
        yield Scene(tri, v, line_angle=mu)


def eval_fixed_angle_circle(scene):
    tri, v = scene.triangle, scene.vertex
    l = frame_line(tri, v, scene.line_angle)
    circle = isogonal_circle(tri, v, l, scene.tolerance, checks=0)
    held = isogonal_samples(tri, v, l, 10, scene.tolerance, offset=3)
    gap = max(circle.gap(p) for p in held) / tri.diameter
    return max(gap, inverted_line_residual(tri, v, held))


# limits

DELTAS = np.logspace(-2, -6, 9)


def _loglog_slope(xs, ys) -> float:
    return float(np.polyfit(np.log(xs), np.log(ys), 1)[0])


def gen_parallel_limit(rng, n):
    made = 0
    while made < n:
        tri = random_triangle(rng)
        v = _vertex(rng)
        t = tri.rotated(v)
        phi = float(rng.uniform(0, math.pi))
        l = Line.from_angle(t.b, phi)
        sides = (Line.through(t.a, t.b), Line.through(t.a, t.c), Line.through(t.b, t.c))
        if min(angle_between_lines(l, s) for s in sides) < 0.2:
            continue
        made += 1
        yield Scene(tri, v, line_angle=phi)


def parallel_limit_distances(tri: Triangle, vertex: str, phi: float, deltas=DELTAS) -> List[float]:
    """|M_A - A| / diameter as the cevian directions close in on ``phi``."""
    t = tri.rotated(vertex)
    out = []
    for d in deltas:
        n1 = Line.from_angle(t.b, phi)
        n2 = Line.from_angle(t.c, phi + d)
        b_a = intersect_lines(n1, Line.through(t.a, t.c))
        c_a = intersect_lines(n2, Line.through(t.a, t.b))
        ac, ab = t.c - t.a, t.b - t.a
        cev = CevianPair((b_a - t.a).dot(ac) / ac.dot(ac), (c_a - t.a).dot(ab) / ab.dot(ab))
        out.append(forward_miquel(tri, vertex, cev).m.dist(t.a) / t.diameter)
    return out


def eval_parallel_limit(scene):
    return abs(_loglog_slope(DELTAS, parallel_limit_distances(scene.triangle, scene.vertex, scene.line_angle)) - 1.0)


def foot_limit_gaps(tri: Triangle, vertex: str, eps=DELTAS):
    """Distance (centre offset + radius gap) / diameter of w_{A C_A C} and w_{A B B_A}
    to their limiting circles as the cevian foot approaches A or the far vertex."""
    t = tri.rotated(vertex)
    aux = auxiliary_data(tri, vertex)
    a, b, c = t.vertices

    def gap(w, lim):
        return (w.center.dist(lim.center) + abs(w.radius - lim.radius)) / t.diameter

    fams = {
        "c_to_a": [gap(circumcircle(a, a + (b - a) * e, c), aux.omega_ab) for e in eps],
        "c_to_b": [gap(circumcircle(a, a + (b - a) * (1 - e), c), t.circumcircle) for e in eps],
        "b_to_a": [gap(circumcircle(a, b, a + (c - a) * e), aux.omega_ac) for e in eps],
        "b_to_c": [gap(circumcircle(a, b, a + (c - a) * (1 - e)), t.circumcircle) for e in eps],
    }
    return fams


def eval_foot_limit(scene):
    fams = foot_limit_gaps(scene.triangle, scene.vertex)
    return max(abs(_loglog_slope(DELTAS, g) - 1.0) for g in fams.values())


# side lemma

def gen_side_lemma(rng, n):
    made = 0
    while made < n:
        tri = random_triangle(rng)
        v = _vertex(rng)
        t = tri.rotated(v)
        if made % 2 == 0:
            s = float(rng.uniform(0.05, 0.95))
            p = t.b + (t.c - t.b) * s
        else:
            p = random_admissible_point(rng, tri, v, margin=1e-3)
            if Line.through(t.b, t.c).distance(p) < 1e-3 * tri.diameter:
                continue
        if admissibility(tri, v, p, 1e-3) is not None:
            continue
        made += 1
        yield Scene(tri, v, point=p)


def eval_side_lemma(scene):
    tri, v = scene.triangle, scene.vertex
    cfg = forward_miquel(tri, v, inverse_miquel(tri, v, scene.point, scene.tolerance), scene.tolerance)
    res = side_lemma_check(cfg, scene.tolerance)
    return 0.0 if res.m_on_bc == res.abcn_concyclic else 1.0


# centres

def gen_centers(rng, n):
    made = 0
    while made < n:
        tri = random_triangle(rng)
        if min(abs(tri.angle(x) - math.pi / 2) for x in "ABC") < 1e-3:
            continue
        kind = CENTER_KINDS[made % 3]
        made += 1
        yield Scene(tri, _vertex(rng), center=kind)


def eval_center_roundtrip(scene):
    tri, v = scene.triangle, scene.vertex
    p = classic_center(tri, scene.center)
    if admissibility(tri, v, p, 1e-6) is not None:
        return None
    cfg = forward_miquel(tri, v, inverse_miquel(tri, v, p, scene.tolerance), scene.tolerance)
    return cfg.m.dist(p) / tri.diameter


def eval_center_case(scene):
    tri, v = scene.triangle, scene.vertex
    if admissibility(tri, v, classic_center(tri, scene.center), 1e-6) is not None:
        return None
    return center_case(tri, v, scene.center, scene.tolerance).worst


PROPERTIES: Dict[str, Property] = {p.name: p for p in [
    Property("concurrency", 1e-9, gen_concurrency, eval_concurrency, 10_000, "cevians"),
    Property("roundtrip_point", 1e-8, gen_roundtrip_point, eval_roundtrip_point, 10_000, "point"),
    Property("roundtrip_cevians", 1e-8, gen_concurrency, eval_roundtrip_cevians, 10_000, "cevians"),
    Property("locus_agreement", 0.0, gen_locus_agreement, eval_locus_agreement, 200_000, "point"),
    Property("aux_centres", 1e-9, gen_triangles, eval_aux_centres, 1_000, "center"),
    Property("main_centres", 1e-9, gen_scalene, eval_main_centres, 1_000, "center"),
    Property("miquel_axis", 1e-10, gen_triangles, eval_miquel_axis, 1_000, "center"),
    Property("parallel_limit_rate", 0.2, gen_parallel_limit, eval_parallel_limit, 50, "line_angle"),
    Property("brocard_points", 1e-9, gen_triangles, eval_brocard_points, 1_000, "center"),
    Property("foot_limit_rate", 0.2, gen_triangles, eval_foot_limit, 50, "center"),
    Property("perpendicular_forward", 1e-9, gen_perpendicular_forward, eval_perpendicular_forward, 1_000, "cevians"),
    Property("perpendicular_converse", 1e-8, gen_perpendicular_converse, eval_perpendicular_converse, 1_000, "point"),
    Property("symmedian_forward", 1e-9, gen_symmedian_forward, eval_symmedian_forward, 1_000, "cevians"),
    Property("symmedian_converse", 1e-8, gen_symmedian_converse, eval_symmedian_converse, 1_000, "point"),
    Property("fixed_direction_closed_form", 1e-9, gen_fixed_direction, eval_fixed_direction_closed_form, 1_000, "point"),
    Property("fixed_direction_line", 1e-9, gen_fixed_direction, eval_fixed_direction_line, 1_000, "point"),
    Property("fixed_angle_circle", 1e-8, gen_fixed_angle_circle, eval_fixed_angle_circle, 50, "line_angle"),
    Property("side_lemma", 0.0, gen_side_lemma, eval_side_lemma, 1_000, "point"),
    Property("center_roundtrip", 1e-8, gen_centers, eval_center_roundtrip, 1_000, "center"),
    Property("center_cases", 1e-9, gen_centers, eval_center_case, 1_000, "center"),
]}

SUITES: Dict[str, List[str]] = {
    "concurrency": ["concurrency"],
    "roundtrip": ["roundtrip_point", "roundtrip_cevians"],
    "locus_agreement": ["locus_agreement"],
    "aux_centres": ["aux_centres"],
    "main_centres": ["main_centres"],
    "miquel_axis": ["miquel_axis"],
    "parallel_limit": ["parallel_limit_rate"],
    "brocard_points": ["brocard_points"],
    "foot_limit": ["foot_limit_rate"],
    "perpendicular": ["perpendicular_forward", "perpendicular_converse"],
    "symmedian": ["symmedian_forward", "symmedian_converse"],
    "fixed_direction": ["fixed_direction_closed_form", "fixed_direction_line"],
    "fixed_angle_circle": ["fixed_angle_circle"],
    "side_lemma": ["side_lemma"],
    "centers": ["center_roundtrip", "center_cases"],
}
SUITES["all"] = [name for names in SUITES.values() for name in names]


def suite_properties(suite: str) -> List[Property]:
    if suite in SUITES:
        return [PROPERTIES[n] for n in SUITES[suite]]
    if suite in PROPERTIES:
        return [PROPERTIES[suite]]
    raise UnknownSuite(suite)


def _safe_eval(prop: Property, scene: Scene) -> Optional[float]:
    try:
        return prop.evaluate(scene)
    except GeometryError:
        return math.inf


def run_property(prop: Property, seed: int = 0, samples: Optional[int] = None) -> PropertyResult:
    rng = np.random.default_rng([seed, sum(map(ord, prop.name))])
    n = prop.samples if samples is None else samples
    worst, worst_scene = -math.inf, None
    evaluated = skipped = 0
    start = time.perf_counter()
    for scene in prop.generate(rng, n):
        r = _safe_eval(prop, scene)
        if r is None:
            skipped += 1
            continue
        evaluated += 1
        if r > worst or worst_scene is None:
            worst, worst_scene = r, scene
    elapsed = time.perf_counter() - start
    if evaluated == 0:
        worst = math.nan
    passed = evaluated > 0 and worst <= prop.threshold
    return PropertyResult(prop.name, prop.threshold, worst, passed, evaluated, skipped,
                          elapsed, worst_scene)


def replay(prop: Property, scene: Scene) -> PropertyResult:
    start = time.perf_counter()
    r = _safe_eval(prop, scene)
    elapsed = time.perf_counter() - start
    if r is None:
        return PropertyResult(prop.name, prop.threshold, math.nan, True, 0, 1, elapsed, scene)
    return PropertyResult(prop.name, prop.threshold, r, r <= prop.threshold, 1, 0, elapsed, scene)
