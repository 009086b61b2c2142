"""Line-oriented ``key = value`` scene files.

Example::

    # incenter of the 3-4-5 triangle
    a = 0, 0
    b = 4, 0
    c = 0, 3
    vertex = A
    point = 1, 1
    seed = 7

Exactly one payload key among ``cevians``, ``point``, ``line_angle``,
``center`` is required. Numbers use a decimal point only.
"""
from __future__ import annotations

import math
import re
from dataclasses import dataclass, replace
from typing import Optional, Tuple

from .errors import DegenerateTriangle, ParseError
from .geom import DEFAULT_TOL, Point, Tolerance, Triangle
from .centers import CENTER_KINDS

PAYLOADS = ("cevians", "point", "line_angle", "center")
KEYS = ("a", "b", "c", "vertex", "seed", "tolerance", "absolute_tolerance") + PAYLOADS

_NUMBER = re.compile(r"^[+-]?(\d+(\.\d*)?|\.\d+)([eE][+-]?\d+)?$")


@dataclass(frozen=True)
class Scene:
    triangle: Triangle
    vertex: str = "A"
    cevians: Optional[Tuple[float, float]] = None
    point: Optional[Point] = None
    line_angle: Optional[float] = None
    center: Optional[str] = None
    tolerance: Tolerance = DEFAULT_TOL
    seed: int = 0
    comment: str = ""

    @property
    def payload(self) -> str:
        for name in PAYLOADS:
            if getattr(self, name) is not None:
                return name
        raise ValueError("scene has no payload")


@dataclass(frozen=True)
class SweepSpec:
    box: Tuple[float, float, float, float]  # xmin, ymin, xmax, ymax
    samples: int = 10_000
    margin: float = 1e-6
    seed: int = 0
    resolution: int = 10  # strata per axis

    def __post_init__(self):
        if self.resolution < 2:
            raise ValueError("resolution must be at least 2")
        if self.margin < 0:
            raise ValueError("margin must be non-negative")


def _num(text: str, lineno: int, key: str) -> float:
    s = text.strip()
    if not _NUMBER.match(s):
        raise ParseError(lineno, key, f"not a number: {s!r}")
    v = float(s)
    if not math.isfinite(v):
        raise ParseError(lineno, key, "not finite")
    return v


def _pair(text: str, lineno: int, key: str) -> Tuple[float, float]:
    parts = text.split(",")
    if len(parts) != 2:
        raise ParseError(lineno, key, "expected two comma-separated numbers")
    return _num(parts[0], lineno, key), _num(parts[1], lineno, key)


def parse_scene(text: str) -> Scene:
    raw = {}
    where = {}
    for lineno, line in enumerate(text.splitlines(), start=1):
        line = line.split("#", 1)[0].strip()
        if not line:
            continue
        if "=" not in line:
            raise ParseError(lineno, line, "expected 'key = value'")
        key, value = (s.strip() for s in line.split("=", 1))
        if key not in KEYS:
            raise ParseError(lineno, key, "unknown key")
        if key in raw:
            raise ParseError(lineno, key, "duplicate key")
        raw[key] = value
        where[key] = lineno

    end = len(text.splitlines()) + 1
    for key in ("a", "b", "c"):
        if key not in raw:
            raise ParseError(end, key, "missing vertex")
    pa, pb, pc = (Point(*_pair(raw[k], where[k], k)) for k in "abc")
    try:
        tri = Triangle(pa, pb, pc)
    except DegenerateTriangle:
        raise ParseError(where["c"], "c", "degenerate triangle") from None

    present = [k for k in PAYLOADS if k in raw]
    if len(present) != 1:
        ln = where[present[1]] if len(present) > 1 else end
        raise ParseError(ln, ",".join(present) or "payload", "exactly one payload")

    kw = {}
    vertex = raw.get("vertex", "A").upper()
    if vertex not in ("A", "B", "C"):
        raise ParseError(where["vertex"], "vertex", "must be A, B or C")
    name = present[0]
    ln = where[name]
    if name == "cevians":
        kw["cevians"] = _pair(raw[name], ln, name)
    elif name == "point":
        kw["point"] = Point(*_pair(raw[name], ln, name))
    elif name == "line_angle":
        kw["line_angle"] = _num(raw[name], ln, name)
    else:
        if raw[name] not in CENTER_KINDS:
            raise ParseError(ln, name, f"must be one of {', '.join(CENTER_KINDS)}")
        kw["center"] = raw[name]

    rel = _num(raw["tolerance"], where["tolerance"], "tolerance") if "tolerance" in raw else DEFAULT_TOL.relative_eps
    ab = (_num(raw["absolute_tolerance"], where["absolute_tolerance"], "absolute_tolerance")
          if "absolute_tolerance" in raw else DEFAULT_TOL.absolute_eps)
    try:
        tol = Tolerance(ab, rel)
    except ValueError as e:
        raise ParseError(where.get("tolerance", end), "tolerance", str(e)) from None
    seed = 0
    if "seed" in raw:
        s = raw["seed"]
        if not s.isdigit():
            raise ParseError(where["seed"], "seed", "must be a non-negative integer")
        seed = int(s)
    return Scene(tri, vertex, tolerance=tol, seed=seed, **kw)


def _fmt(v: float) -> str:
    return repr(float(v))


def format_scene(scene: Scene) -> str:
    """Serialise so that ``parse_scene(format_scene(s)) == s`` (floats round-trip)."""
    lines = []
    if scene.comment:
        lines += [f"# {c}" for c in scene.comment.splitlines()]
    for key, p in zip("abc", scene.triangle.vertices):
        lines.append(f"{key} = {_fmt(p.x)}, {_fmt(p.y)}")
    lines.append(f"vertex = {scene.vertex}")
    if scene.cevians is not None:
        lines.append(f"cevians = {_fmt(scene.cevians[0])}, {_fmt(scene.cevians[1])}")
    if scene.point is not None:
        lines.append(f"point = {_fmt(scene.point.x)}, {_fmt(scene.point.y)}")
    if scene.line_angle is not None:
        lines.append(f"line_angle = {_fmt(scene.line_angle)}")
    if scene.center is not None:
        lines.append(f"center = {scene.center}")
    if scene.tolerance != DEFAULT_TOL:
        lines.append(f"tolerance = {_fmt(scene.tolerance.relative_eps)}")
        lines.append(f"absolute_tolerance = {_fmt(scene.tolerance.absolute_eps)}")
    lines.append(f"seed = {scene.seed}")
    return "\n".join(lines) + "\n"


def with_comment(scene: Scene, comment: str) -> Scene:
    return replace(scene, comment=comment)
