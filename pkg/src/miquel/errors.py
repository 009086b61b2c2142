"""Typed failures raised by the kernel.

Every error prints as ``Name(detail)`` so the CLI can surface it verbatim.
"""


class GeometryError(Exception):
    detail = ""

    def __init__(self, detail: str = ""):
        self.detail = detail
        super().__init__(detail)

    def __str__(self):
        return f"{type(self).__name__}({self.detail})" if self.detail else type(self).__name__


class CollinearInput(GeometryError):
    pass


class DegenerateTriangle(GeometryError):
    pass


class CoincidentCircles(GeometryError):
    pass


class PointNotOnCircle(GeometryError):
    pass


class ThroughPointOnTangent(GeometryError):
    pass


class CenterInversion(GeometryError):
    pass


class DegenerateRay(GeometryError):
    pass


class AllCollinear(GeometryError):
    pass


# miquel map

class ExcludedCevian(GeometryError):
    pass


class ParallelCevians(GeometryError):
    pass


class TangentAtA(GeometryError):
    pass


class InadmissiblePoint(GeometryError):
    """``detail`` is one of on_circumcircle, on_AB, on_AC."""

    @property
    def reason(self):
        return self.detail


class BoundaryAmbiguous(GeometryError):
    pass


# locus / brocard

class DegenerateOI(GeometryError):
    pass


class NearEquilateralDegeneracy(GeometryError):
    pass


class TangentsParallel(GeometryError):
    pass


class LineAlongSide(GeometryError):
    pass


class SingularDenominator(GeometryError):
    pass


class DegenerateSamples(GeometryError):
    pass


class NearLine(DegenerateSamples):
    """Sampled Miquel points are collinear; ``line`` holds the fitted line."""

    def __init__(self, detail="", line=None):
        super().__init__(detail)
        self.line = line


# centre cases

class ParallelBisectors(GeometryError):
    pass


class RightAngleAtVertex(GeometryError):
    pass


class BisectorParallelToSide(GeometryError):
    pass


# cli

class ParseError(GeometryError):
    def __init__(self, line: int, field: str, reason: str):
        self.line = line
        self.field = field
        self.reason = reason
        super().__init__(f"line {line}, {field}: {reason}")


class UnknownSuite(GeometryError):
    pass
