"""Miquel-Steiner points of cevian pairs: forward and inverse maps, loci and
special cases, with property suites and figure output."""
from .centers import CENTER_KINDS, CenterCaseReport, bisector_candidates, center_case, classic_center
from .errors import GeometryError
from .geom import DEFAULT_TOL, Circle, Line, Point, Tolerance, Triangle
from .locus import (
    LocusVerdict,
    auxiliary_data,
    brocard_circle,
    brocard_points,
    closed_form_statement4,
    isogonal_circle,
    locus_membership,
    omega_tan,
    symmedian_line,
)
from .miquel_map import CevianPair, MiquelConfiguration, classify_cevians, forward_miquel, inverse_miquel
from .scene import Scene, SweepSpec, format_scene, parse_scene

__all__ = [
    "CENTER_KINDS", "CenterCaseReport", "bisector_candidates", "center_case", "classic_center",
    "GeometryError", "DEFAULT_TOL", "Circle", "Line", "Point", "Tolerance", "Triangle",
    "LocusVerdict", "auxiliary_data", "brocard_circle", "brocard_points", "closed_form_statement4",
    "isogonal_circle", "locus_membership", "omega_tan", "symmedian_line",
    "CevianPair", "MiquelConfiguration", "classify_cevians", "forward_miquel", "inverse_miquel",
    "Scene", "SweepSpec", "format_scene", "parse_scene",
]
