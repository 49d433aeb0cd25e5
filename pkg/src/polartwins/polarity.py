"""Pole/polar reciprocity with respect to an inversion circle.

A circle reciprocates into a conic focused at the inversion center, and a
conic reciprocated about one of its foci comes back as a circle.  Both maps
are implemented directly from the focus-directrix data, so a round trip is
exact up to rounding.
"""

from __future__ import annotations

import enum
import math
from dataclasses import dataclass, field

import numpy as np

from .errors import (
    CenterHasNoPolar,
    ConcentricDegenerate,
    InvalidConic,
    InversionNotAtFocus,
    LineThroughCenter,
)
from .geom_core import (
    DEFAULT_TOL,
    Circle,
    Line,
    Point,
    Tolerance,
    circle_through_diameter,
    distance,
    invert_point,
    project_point_on_line,
)

PARABOLA_BAND = 1e-9


class ConicKind(enum.Enum):
    ELLIPSE = "ellipse"
    PARABOLA = "parabola"
    HYPERBOLA = "hyperbola"


@dataclass(frozen=True)
class Conic:
    """Conic in focus-directrix form: ``|p - focus| = e * dist(p, directrix)``.

    ``branch`` only matters for hyperbolas: ``+1`` marks the branch wrapped
    around ``focus``, ``-1`` the far one, ``None`` the whole curve.  It is used
    for rendering and filtering; the implicit equation always covers both.
    """

    focus: Point
    directrix: Line
    eccentricity: float
    branch: int | None = None
    coefficients: tuple = field(init=False, repr=False, compare=False)

    def __post_init__(self):
        e = self.eccentricity
        if not (math.isfinite(e) and e > 0):
            raise InvalidConic(f"eccentricity must be positive, got {e!r}")
        if self.directrix.distance(self.focus) <= DEFAULT_TOL.length_eps:
            raise InvalidConic("focus lies on the directrix")
        n, c = self.directrix.normal, self.directrix.offset
        fx, fy = self.focus.x, self.focus.y
        e2 = e * e
        # |p - F|^2 - e^2 (n.p - c)^2 expanded
        coeffs = (
            1.0 - e2 * n.x * n.x,
            -2.0 * e2 * n.x * n.y,
            1.0 - e2 * n.y * n.y,
            -2.0 * fx + 2.0 * e2 * c * n.x,
            -2.0 * fy + 2.0 * e2 * c * n.y,
            fx * fx + fy * fy - e2 * c * c,
        )
        object.__setattr__(self, "coefficients", coeffs)

    @property
    def kind(self) -> ConicKind:
        return classify(self)

    @property
    def focal_parameter(self) -> float:
        """Distance from the focus to the directrix."""
        return self.directrix.distance(self.focus)

    @property
    def axis(self) -> Point:
        """Unit vector along the focal axis pointing away from the directrix."""
        s = self.directrix.signed_distance(self.focus)
        return self.directrix.normal * (1.0 if s > 0 else -1.0)

    def point_at(self, theta: float) -> Point:
        """Point at polar angle ``theta`` about the focus, measured from :attr:`axis`.

        Hyperbola angles with ``1 - e cos(theta) < 0`` land on the far branch.
        """
        e, p = self.eccentricity, self.focal_parameter
        denom = 1.0 - e * math.cos(theta)
        if denom == 0.0:
            raise InvalidConic("asymptotic direction has no finite point")
        rho = e * p / denom
        u = self.axis
        w = u.perp()
        return self.focus + (u * math.cos(theta) + w * math.sin(theta)) * rho

    def vertices(self) -> list[Point]:
        """Vertices on the focal axis, near vertex first (one for a parabola)."""
        e, p, u = self.eccentricity, self.focal_parameter, self.axis
        near = self.focus - u * (e * p / (1.0 + e))
        if self.kind is ConicKind.PARABOLA:
            return [near]
        return [near, self.focus + u * (e * p / (1.0 - e))]

    def other_focus(self) -> Point | None:
        if self.kind is ConicKind.PARABOLA:
            return None
        near, far = self.vertices()
        return near + far - self.focus

    def matrix(self) -> np.ndarray:
        a, b, c, d, e, f = self.coefficients
        return np.array([[a, b / 2, d / 2], [b / 2, c, e / 2], [d / 2, e / 2, f]])

    def implicit(self, p: Point) -> float:
        a, b, c, d, e, f = self.coefficients
        return a * p.x * p.x + b * p.x * p.y + c * p.y * p.y + d * p.x + e * p.y + f

    def residual(self, p: Point) -> float:
        """Focus-directrix defect ``| |p-F| - e*dist(p,D) |`` in length units."""
        return abs(distance(p, self.focus) - self.eccentricity * self.directrix.distance(p))

    def branch_of(self, p: Point) -> int:
        """+1 if ``p`` is on the focus side of the directrix (the near branch), else -1."""
        s = self.directrix.signed_distance(p) * self.directrix.signed_distance(self.focus)
        return 1 if s > 0 else -1

    def sample(self, n: int = 64, branch: int | None = None, theta_margin: float = 0.05) -> list[Point]:
        """``n`` points spread over the curve (or over one hyperbola branch)."""
        e = self.eccentricity
        branch = self.branch if branch is None else branch
        if e < 1.0 and self.kind is ConicKind.ELLIPSE:
            return [self.point_at(2 * math.pi * k / n) for k in range(n)]
        # the near branch lives on 1 - e cos > 0; open curves avoid the asymptotes
        edge = math.acos(min(1.0, 1.0 / e))
        lo, hi = edge + theta_margin, 2 * math.pi - edge - theta_margin
        near = [self.point_at(lo + (hi - lo) * k / (n - 1)) for k in range(n)]
        if self.kind is ConicKind.PARABOLA or branch == 1:
            return near
        lo, hi = -edge + theta_margin, edge - theta_margin
        far = [self.point_at(lo + (hi - lo) * k / (n - 1)) for k in range(n)]
        if branch == -1:
            return far
        return near + far


def classify(k: Conic) -> ConicKind:
    e = k.eccentricity
    if abs(e - 1.0) <= PARABOLA_BAND:
        return ConicKind.PARABOLA
    return ConicKind.ELLIPSE if e < 1.0 else ConicKind.HYPERBOLA


def pole_of_line(l: Line, inv: Circle, tol: Tolerance = DEFAULT_TOL) -> Point:
    if l.distance(inv.center) <= tol.length_eps:
        raise LineThroughCenter(f"{l} passes through the inversion center")
    return invert_point(project_point_on_line(inv.center, l), inv, tol)


def polar_of_point(p: Point, inv: Circle, tol: Tolerance = DEFAULT_TOL) -> Line:
    if distance(p, inv.center) <= tol.length_eps:
        raise CenterHasNoPolar("the inversion center has no polar")
    q = invert_point(p, inv, tol)
    return Line.from_point_normal(q, p - inv.center)


def dual_of_circle(c: Circle, inv: Circle, tol: Tolerance = DEFAULT_TOL) -> Conic:
    """Reciprocal conic of ``c``: focus at the inversion center, directrix the
    polar of ``c.center``, eccentricity ``d / r`` (``d`` the center distance).

    An ellipse when the inversion center is inside ``c``, a parabola when it is
    on ``c`` and a hyperbola when outside.
    """
    d = distance(c.center, inv.center)
    if d <= tol.length_eps:
        raise ConcentricDegenerate("a circle concentric with the inversion circle reciprocates to a circle")
    e = d / c.radius
    if abs(e - 1.0) <= PARABOLA_BAND:
        e = 1.0
    return Conic(inv.center, polar_of_point(c.center, inv, tol), e)


def dual_of_conic(k: Conic, inv: Circle, tol: Tolerance = DEFAULT_TOL) -> Circle:
    """Reciprocal circle of ``k`` about its focus.

    Its diameter joins the inverses of the two focal-axis vertices; for a
    parabola the far vertex is at infinity and the diameter runs from the
    inversion center to the inverse of the vertex.
    """
    if distance(k.focus, inv.center) > tol.length_eps:
        raise InversionNotAtFocus("the inversion circle must be centered at the conic's focus")
    verts = k.vertices()
    if len(verts) == 1:
        return circle_through_diameter(inv.center, invert_point(verts[0], inv, tol), tol)
    return circle_through_diameter(
        invert_point(verts[0], inv, tol), invert_point(verts[1], inv, tol), tol
    )
