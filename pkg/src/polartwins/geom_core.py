"""Planar primitives: points, lines in Hessian normal form, circles.

Every comparison takes an explicit :class:`Tolerance`; ``DEFAULT_TOL`` is an
immutable value and nothing here keeps mutable module state.
"""

from __future__ import annotations

import math
from dataclasses import dataclass

from .errors import CenterInversion, DegenerateDiameter, GeometryError


@dataclass(frozen=True)
class Tolerance:
    length_eps: float = 1e-9
    residual_eps: float = 1e-7
    rel_eps: float = 1e-9

    def __post_init__(self):
        for name in ("length_eps", "residual_eps", "rel_eps"):
            value = getattr(self, name)
            if not (math.isfinite(value) and value > 0):
                raise ValueError(f"{name} must be a positive finite number, got {value!r}")

    def as_dict(self) -> dict:
        return {
            "length_eps": self.length_eps,
            "residual_eps": self.residual_eps,
            "rel_eps": self.rel_eps,
        }


DEFAULT_TOL = Tolerance()


@dataclass(frozen=True)
class Point:
    x: float
    y: float

    def __post_init__(self):
        if not (math.isfinite(self.x) and math.isfinite(self.y)):
            raise GeometryError(f"non-finite point ({self.x!r}, {self.y!r})")
        object.__setattr__(self, "x", float(self.x))
        object.__setattr__(self, "y", float(self.y))

    def __add__(self, other: Point) -> Point:
        return Point(self.x + other.x, self.y + other.y)

    def __sub__(self, other: Point) -> Point:
        return Point(self.x - other.x, self.y - other.y)

    def __mul__(self, k: float) -> Point:
        return Point(self.x * k, self.y * k)

    __rmul__ = __mul__

    def __truediv__(self, k: float) -> Point:
        return Point(self.x / k, self.y / k)

    def __neg__(self) -> Point:
        return Point(-self.x, -self.y)

    def __iter__(self):
        yield self.x
        yield self.y

    def dot(self, other: Point) -> float:
        return self.x * other.x + self.y * other.y

    def cross(self, other: Point) -> float:
        return self.x * other.y - self.y * other.x

    def norm(self) -> float:
        return math.hypot(self.x, self.y)

    def unit(self) -> Point:
        n = self.norm()
        if n == 0.0:
            raise GeometryError("zero vector has no direction")
        return Point(self.x / n, self.y / n)

    def perp(self) -> Point:
        """Counter-clockwise quarter turn."""
        return Point(-self.y, self.x)

    def isclose(self, other: Point, tol: Tolerance = DEFAULT_TOL) -> bool:
        return distance(self, other) <= tol.length_eps


ORIGIN = Point(0.0, 0.0)


def distance(p: Point, q: Point) -> float:
    return math.hypot(p.x - q.x, p.y - q.y)


def midpoint(p: Point, q: Point) -> Point:
    return Point(0.5 * (p.x + q.x), 0.5 * (p.y + q.y))


@dataclass(frozen=True, eq=False)
class Line:
    """The set ``{p : normal . p = offset}``.

    The normal is rescaled to unit length and its sign fixed so that the first
    nonzero component of the normal is positive; two descriptions of the same
    line therefore end up with the same fields.
    """

    normal: Point
    offset: float

    def __post_init__(self):
        n = self.normal.norm()
        if not (n > 0.0 and math.isfinite(n)) or not math.isfinite(self.offset):
            raise GeometryError("line needs a nonzero finite normal and finite offset")
        nx, ny, c = self.normal.x / n, self.normal.y / n, self.offset / n
        if nx < 0.0 or (nx == 0.0 and ny < 0.0):
            nx, ny, c = -nx, -ny, -c
        # avoid -0.0 leaking into reprs and equality of formatted output
        object.__setattr__(self, "normal", Point(nx + 0.0, ny + 0.0))
        object.__setattr__(self, "offset", c + 0.0)

    @classmethod
    def through(cls, p: Point, q: Point) -> Line:
        d = q - p
        if d.norm() == 0.0:
            raise GeometryError("two coincident points do not define a line")
        n = d.perp().unit()
        return cls(n, n.dot(p))

    @classmethod
    def from_point_normal(cls, p: Point, normal: Point) -> Line:
        n = normal.unit()
        return cls(n, n.dot(p))

    @classmethod
    def from_point_direction(cls, p: Point, direction: Point) -> Line:
        return cls.from_point_normal(p, direction.perp())

    @classmethod
    def vertical(cls, x: float) -> Line:
        return cls(Point(1.0, 0.0), x)

    @classmethod
    def horizontal(cls, y: float) -> Line:
        return cls(Point(0.0, 1.0), y)

    @property
    def direction(self) -> Point:
        return self.normal.perp()

    def signed_distance(self, p: Point) -> float:
        return self.normal.dot(p) - self.offset

    def distance(self, p: Point) -> float:
        return abs(self.signed_distance(p))

    def point(self) -> Point:
        """Foot of the origin on the line."""
        return self.normal * self.offset

    def contains(self, p: Point, tol: Tolerance = DEFAULT_TOL) -> bool:
        return self.distance(p) <= tol.length_eps

    def isclose(self, other: Line, tol: Tolerance = DEFAULT_TOL) -> bool:
        return (
            distance(self.normal, other.normal) <= tol.rel_eps
            and abs(self.offset - other.offset) <= tol.length_eps
        )

    def __eq__(self, other):
        if not isinstance(other, Line):
            return NotImplemented
        return self.isclose(other)

    def __repr__(self):
        return f"Line(normal=({self.normal.x:.12g}, {self.normal.y:.12g}), offset={self.offset:.12g})"


@dataclass(frozen=True)
class Circle:
    center: Point
    radius: float

    def __post_init__(self):
        if not (math.isfinite(self.radius) and self.radius > DEFAULT_TOL.length_eps):
            raise GeometryError(f"circle radius must be positive, got {self.radius!r}")
        object.__setattr__(self, "radius", float(self.radius))

    def point_at(self, angle: float) -> Point:
        return Point(
            self.center.x + self.radius * math.cos(angle),
            self.center.y + self.radius * math.sin(angle),
        )

    def power(self, p: Point) -> float:
        return distance(p, self.center) ** 2 - self.radius**2

    def contains(self, p: Point, tol: Tolerance = DEFAULT_TOL) -> bool:
        """True when ``p`` lies on the circle."""
        return abs(distance(p, self.center) - self.radius) <= tol.length_eps

    def scaled(self, k: float) -> Circle:
        return Circle(self.center * k, self.radius * k)

    def isclose(self, other: Circle, tol: Tolerance = DEFAULT_TOL) -> bool:
        scale = max(1.0, self.radius, other.radius)
        return (
            distance(self.center, other.center) <= tol.rel_eps * scale
            and abs(self.radius - other.radius) <= tol.rel_eps * scale
        )


def project_point_on_line(p: Point, l: Line) -> Point:
    return p - l.normal * l.signed_distance(p)


def reflect_point_in_line(p: Point, l: Line) -> Point:
    return p - l.normal * (2.0 * l.signed_distance(p))


def invert_point(p: Point, inv: Circle, tol: Tolerance = DEFAULT_TOL) -> Point:
    """Inverse of ``p`` in ``inv``: same ray from the center, ``|Op|.|Op'| = R^2``."""
    v = p - inv.center
    d2 = v.dot(v)
    if math.sqrt(d2) <= tol.length_eps:
        raise CenterInversion(f"cannot invert the inversion center {p}")
    return inv.center + v * (inv.radius**2 / d2)


def circle_through_diameter(a: Point, b: Point, tol: Tolerance = DEFAULT_TOL) -> Circle:
    d = distance(a, b)
    if d <= tol.length_eps:
        raise DegenerateDiameter(f"diameter endpoints coincide: {a}, {b}")
    return Circle(midpoint(a, b), 0.5 * d)


def intersect_lines(l1: Line, l2: Line, tol: Tolerance = DEFAULT_TOL) -> Point | None:
    """Meet of two lines, ``None`` when they are parallel."""
    det = l1.normal.cross(l2.normal)
    if abs(det) <= tol.rel_eps:
        return None
    x = (l1.offset * l2.normal.y - l2.offset * l1.normal.y) / det
    y = (l1.normal.x * l2.offset - l2.normal.x * l1.offset) / det
    return Point(x, y)


def intersect_line_circle(l: Line, c: Circle, tol: Tolerance = DEFAULT_TOL) -> list[Point]:
    foot = project_point_on_line(c.center, l)
    h2 = c.radius**2 - distance(foot, c.center) ** 2
    if h2 < -tol.length_eps * c.radius:
        return []
    h = math.sqrt(max(h2, 0.0))
    if h <= tol.length_eps:
        return [foot]
    d = l.direction
    return sorted([foot - d * h, foot + d * h], key=lambda p: (p.x, p.y))
