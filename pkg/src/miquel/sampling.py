"""Seeded random triangles and admissible samples for property sweeps."""
from __future__ import annotations

import math

import numpy as np

from .errors import DegenerateTriangle
from .geom import Line, Point, Triangle, angle_at, angle_between_lines
from .miquel_map import CevianPair, admissibility, cevian_points


def random_triangle(rng: np.random.Generator, min_angle: float = math.radians(5),
                    acute_vertex: bool = False, scalene_gap: float = 0.0) -> Triangle:
    """Triangle with all angles >= ``min_angle`` at a random scale and offset.

    ``acute_vertex`` additionally keeps the angle at A below 90 degrees by at
    least ``min_angle``; ``scalene_gap`` bounds relative side differences from below.
    """
    while True:
        scale = 10.0 ** rng.uniform(-1, 1)
        off = rng.uniform(-5, 5, 2)
        pts = [Point(*(off + scale * rng.uniform(-1, 1, 2))) for _ in range(3)]
        try:
            tri = Triangle(*pts)
        except DegenerateTriangle:
            continue
        a, b, c = pts
        angles = [angle_at(a, b, c), angle_at(b, c, a), angle_at(c, a, b)]
        if min(angles) < min_angle:
            continue
        if acute_vertex and angles[0] > math.pi / 2 - min_angle:
            continue
        if scalene_gap:
            sides = sorted([pts[1].dist(pts[2]), pts[0].dist(pts[2]), pts[0].dist(pts[1])])
            if min(sides[1] - sides[0], sides[2] - sides[1]) < scalene_gap * sides[2]:
                continue
        return tri


def cevians_parallel_gap(tri: Triangle, vertex: str, cev: CevianPair) -> float:
    t = tri.rotated(vertex)
    b_a, c_a = cevian_points(tri, vertex, cev)
    return angle_between_lines(Line.through(t.b, b_a), Line.through(t.c, c_a))


def random_cevians(rng: np.random.Generator, tri: Triangle, vertex: str = "A",
                   lo: float = -3.0, hi: float = 4.0, margin: float = 1e-3) -> CevianPair:
    """Cevian parameters in [lo, hi] kept ``margin`` away from 0, 1 and from parallel cevians."""
    while True:
        t_b, t_c = rng.uniform(lo, hi, 2)
        if min(abs(t_b), abs(t_b - 1), abs(t_c), abs(t_c - 1)) < margin:
            continue
        cev = CevianPair(float(t_b), float(t_c))
        if cevians_parallel_gap(tri, vertex, cev) < margin:
            continue
        return cev


def random_admissible_point(rng: np.random.Generator, tri: Triangle, vertex: str = "A",
                            box_scale: float = 3.0, margin: float = 1e-6) -> Point:
    """Point in the box of half-width ``box_scale`` circumradii around O, off AB, AC and the circumcircle."""
    w = tri.circumcircle
    while True:
        x, y = rng.uniform(-box_scale, box_scale, 2) * w.radius
        p = Point(w.center.x + x, w.center.y + y)
        if admissibility(tri, vertex, p, margin) is None:
            return p
