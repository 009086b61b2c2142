"""Seeded property suites not already covered by the acceptance criteria,
plus runner behaviour (determinism, skip accounting)."""
import pytest

from miquel.checks import DELTAS, PROPERTIES, SUITES, _loglog_slope, foot_limit_gaps, run_property, suite_properties
from miquel.geom import Point, Triangle


@pytest.mark.parametrize("name", ["foot_limit_rate", "side_lemma", "center_roundtrip", "center_cases"])
def test_suite_property(name):
    res = run_property(PROPERTIES[name], seed=1, samples=300)
    assert res.passed, res.line()


def test_foot_limit_limits_on_fixed_triangle():
    tri = Triangle(Point(0, 0), Point(4, 0), Point(1, 3))
    for family, gaps in foot_limit_gaps(tri, "A").items():
        assert gaps[-1] < 1e-4, family
        assert abs(_loglog_slope(DELTAS, gaps) - 1) <= 0.2, family


def test_runs_are_deterministic():
    a = run_property(PROPERTIES["fixed_direction_line"], seed=9, samples=50)
    b = run_property(PROPERTIES["fixed_direction_line"], seed=9, samples=50)
    assert (a.worst, a.worst_scene) == (b.worst, b.worst_scene)


def test_every_property_belongs_to_a_suite():
    assert set(SUITES["all"]) == set(PROPERTIES)
    assert len(suite_properties("all")) == len(PROPERTIES)
