"""Empirical check of the internal-cevian locus: analytic verdict vs inverse map."""
from __future__ import annotations

import io
import math
from dataclasses import dataclass
from typing import Iterator, List, Optional, Tuple

import numpy as np

from .errors import GeometryError
from .geom import DEFAULT_TOL, Point, Tolerance, Triangle
from .locus import LocusVerdict, auxiliary_data, locus_membership
from .miquel_map import classify_cevians, inverse_miquel
from .scene import SweepSpec

SKIPPED = (LocusVerdict.BOUNDARY, LocusVerdict.INADMISSIBLE)


@dataclass(frozen=True)
class SweepRow:
    x: float
    y: float
    analytic: str
    empirical: str
    agree: Optional[bool]  # None when the sample is inside the margin band


def default_box(tri: Triangle, vertex: str = "A", scale: float = 1.5) -> Tuple[float, float, float, float]:
    w = tri.rotated(vertex).circumcircle
    r = scale * w.radius
    return (w.center.x - r, w.center.y - r, w.center.x + r, w.center.y + r)


def sample_points(tri: Triangle, vertex: str, spec: SweepSpec) -> Iterator[Point]:
    """Half stratified-uniform over the box, half probing the three boundary circles
    at log-uniform offsets between the margin and a fifth of the diameter."""
    rng = np.random.default_rng(spec.seed)
    t = tri.rotated(vertex)
    aux = auxiliary_data(tri, vertex)
    circles = (t.circumcircle, aux.omega_ab, aux.omega_ac)
    d = t.diameter
    x0, y0, x1, y1 = spec.box
    k = spec.resolution
    n_strat = spec.samples - spec.samples // 2
    lo = math.log10(max(spec.margin, 1e-15)) + 0.3
    for i in range(spec.samples):
        if i < n_strat:
            cell = i % (k * k)
            cx, cy = cell % k, cell // k
            u, v = rng.uniform(0, 1, 2)
            yield Point(x0 + (cx + u) / k * (x1 - x0), y0 + (cy + v) / k * (y1 - y0))
        else:
            c = circles[int(rng.integers(3))]
            theta = rng.uniform(0, 2 * math.pi)
            off = d * 10.0 ** rng.uniform(lo, math.log10(0.2)) * (1 if rng.uniform() < 0.5 else -1)
            r = c.radius + off
            if r <= 0:
                r = c.radius - off
            yield Point(c.center.x + r * math.cos(theta), c.center.y + r * math.sin(theta))


def sweep_row(tri: Triangle, vertex: str, p: Point, margin: float,
              tol: Tolerance = DEFAULT_TOL) -> SweepRow:
    band = margin * tri.diameter
    verdict = locus_membership(tri, vertex, p, band=band, tol=tol)
    try:
        cls = classify_cevians(inverse_miquel(tri, vertex, p, tol))
        empirical = "|".join(cls)
        internal = cls == ("internal", "internal")
    except GeometryError as e:
        empirical, internal = f"error:{type(e).__name__}", None
    if verdict in SKIPPED:
        return SweepRow(p.x, p.y, verdict.value, empirical, None)
    agree = internal is not None and (verdict is LocusVerdict.MEMBER) == internal
    return SweepRow(p.x, p.y, verdict.value, empirical, agree)


def run_sweep(tri: Triangle, vertex: str, spec: SweepSpec,
              tol: Tolerance = DEFAULT_TOL) -> Tuple[List[SweepRow], float, int]:
    """Rows, agreement rate over margin-respecting rows, and how many were counted."""
    rows = [sweep_row(tri, vertex, p, spec.margin, tol) for p in sample_points(tri, vertex, spec)]
    counted = [r for r in rows if r.agree is not None]
    rate = sum(r.agree for r in counted) / len(counted) if counted else math.nan
    return rows, rate, len(counted)


def _g12(v: float) -> str:
    return f"{v:.12g}"


def sweep_csv(rows: List[SweepRow], rate: float, counted: int) -> str:
    out = io.StringIO()
    out.write("x,y,analytic,empirical,agree\n")
    for r in rows:
        agree = "" if r.agree is None else ("1" if r.agree else "0")
        out.write(f"{_g12(r.x)},{_g12(r.y)},{r.analytic},{r.empirical},{agree}\n")
    out.write(f"# agreement_rate={_g12(rate)} counted={counted} total={len(rows)}\n")
    return out.getvalue()
