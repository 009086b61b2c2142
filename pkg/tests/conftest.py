import math
import sys

import pytest
from hypothesis import assume, settings
from hypothesis import strategies as st

from miquel.errors import DegenerateTriangle
from miquel.geom import Point, Triangle

settings.register_profile("default", max_examples=200, deadline=None)
settings.load_profile("default")

coord = st.floats(-10, 10, allow_nan=False, allow_infinity=False)
points = st.builds(Point, coord, coord)
vertices = st.sampled_from("ABC")


@st.composite
def triangles(draw, min_angle_deg=5.0, acute_a=False):
    a, b, c = draw(points), draw(points), draw(points)
    try:
        tri = Triangle(a, b, c)
    except DegenerateTriangle:
        assume(False)
    angles = [tri.angle(v) for v in "ABC"]
    assume(min(angles) >= math.radians(min_angle_deg))
    if acute_a:
        assume(angles[0] <= math.pi / 2 - math.radians(min_angle_deg))
    return tri


def P(x, y):
    return Point(float(x), float(y))


@pytest.fixture
def t345():
    return Triangle(P(0, 0), P(4, 0), P(0, 3))


@pytest.fixture
def t413():
    return Triangle(P(0, 0), P(4, 0), P(1, 3))


@pytest.fixture
def t_iso():
    return Triangle(P(0, 0), P(2, 0), P(0, 2))


@pytest.fixture
def t_eq():
    return Triangle(P(0, 0), P(2, 0), P(1, math.sqrt(3)))


def close(p, q, tol=1e-12):
    return p.dist(q) <= tol


def pytest_terminal_summary(terminalreporter):
    mod = sys.modules.get("test_acceptance")
    if mod is not None and mod.RESULTS:
        terminalreporter.section("acceptance criteria")
        for line in sorted(mod.RESULTS):
            terminalreporter.write_line(line)
