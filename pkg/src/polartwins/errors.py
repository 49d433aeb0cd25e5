"""Exceptions raised by degenerate geometric inputs."""


class GeometryError(ValueError):
    """Base class for every degenerate-configuration error in the package."""


class CenterInversion(GeometryError):
    pass


class DegenerateDiameter(GeometryError):
    pass


class LineThroughCenter(GeometryError):
    pass


class CenterHasNoPolar(GeometryError):
    pass


class ConcentricDegenerate(GeometryError):
    pass


class InversionNotAtFocus(GeometryError):
    pass


class InvalidConic(GeometryError):
    pass


class IdenticalCircles(GeometryError):
    pass


class PointInsideOrOn(GeometryError):
    pass


class LineNotTangent(GeometryError):
    pass


class NotInternallyTangent(GeometryError):
    pass


class DegenerateFoci(GeometryError):
    pass


class FociDiffer(GeometryError):
    pass


class IllConditioned(GeometryError):
    pass


class NonPositiveRadius(GeometryError):
    pass
