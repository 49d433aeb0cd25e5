"""Tangent lines, similitude centers, Apollonius loci and conic intersection.

Two independent routes intersect conics:

* :func:`intersect_shared_focus` reciprocates two confocal conics into
  circles, takes their common tangents and maps each tangent back to its pole;
* :func:`intersect_numeric` never touches duality: it splits a degenerate
  member of the pencil spanned by the two quadratics into a line pair and
  intersects those lines with one conic.
"""

from __future__ import annotations

import enum
import math
from dataclasses import dataclass

import numpy as np

from .errors import (
    DegenerateFoci,
    FociDiffer,
    GeometryError,
    IdenticalCircles,
    IllConditioned,
    InvalidConic,
    LineNotTangent,
    NotInternallyTangent,
    PointInsideOrOn,
)
from .geom_core import (
    DEFAULT_TOL,
    Circle,
    Line,
    Point,
    Tolerance,
    distance,
    midpoint,
    project_point_on_line,
)
from .polarity import Conic, dual_of_conic, pole_of_line

MERGE_RADIUS = 1e-6


class SimilitudeKind(enum.Enum):
    EXTERNAL = "external"
    INTERNAL = "internal"


@dataclass(frozen=True)
class SimilitudeCenter:
    point: Point
    kind: SimilitudeKind


class Contact(enum.Enum):
    INTERNAL = "internal"
    EXTERNAL = "external"
    LINE = "line"


@dataclass(frozen=True)
class TangencyConstraint:
    """A tangency a constructed circle must satisfy against ``target``."""

    target: Circle | Line
    contact: Contact
    label: str = ""

    def residual(self, c: Circle) -> float:
        if self.contact is Contact.LINE:
            return abs(self.target.distance(c.center) - c.radius)
        d = distance(c.center, self.target.center)
        if self.contact is Contact.INTERNAL:
            return abs(d - abs(self.target.radius - c.radius))
        return abs(d - (self.target.radius + c.radius))


def contact_residuals(c: Circle, target: Circle) -> dict[str, float]:
    """Residual of ``c`` against ``target`` for each circle contact type."""
    return {
        kind.value: TangencyConstraint(target, kind).residual(c)
        for kind in (Contact.INTERNAL, Contact.EXTERNAL)
    }


def tangent_point(l: Line, c: Circle) -> Point:
    return project_point_on_line(c.center, l)


def tangent_lines_from_point(p: Point, c: Circle, tol: Tolerance = DEFAULT_TOL) -> list[Line]:
    """The two tangents from an exterior point, ordered by tangency-point y."""
    v = p - c.center
    d = v.norm()
    if d <= c.radius + tol.length_eps:
        raise PointInsideOrOn(f"{p} is not outside the circle {c}")
    u = v / d
    r = c.radius
    base = c.center + u * (r * r / d)
    h = r * math.sqrt(d * d - r * r) / d
    touch = sorted([base + u.perp() * h, base - u.perp() * h], key=lambda t: (t.y, t.x))
    return [Line.through(p, t) for t in touch]


def similitude_centers(
    c1: Circle, c2: Circle, tol: Tolerance = DEFAULT_TOL
) -> tuple[SimilitudeCenter | None, SimilitudeCenter]:
    """(external, internal) centers of similitude; external is None for equal radii."""
    if c1.isclose(c2, tol):
        raise IdenticalCircles("identical circles have no similitude centers")
    r1, r2 = c1.radius, c2.radius
    internal = (c1.center * r2 + c2.center * r1) / (r1 + r2)
    external = None
    if abs(r1 - r2) > tol.rel_eps * max(r1, r2):
        external = SimilitudeCenter((c1.center * r2 - c2.center * r1) / (r2 - r1), SimilitudeKind.EXTERNAL)
    return external, SimilitudeCenter(internal, SimilitudeKind.INTERNAL)


def common_tangents(
    c1: Circle, c2: Circle, tol: Tolerance = DEFAULT_TOL
) -> list[tuple[Line, SimilitudeKind]]:
    """Every line tangent to both circles, labeled by the similitude center it
    passes through.  Sorted by normal angle, then offset."""
    if c1.isclose(c2, tol):
        raise IdenticalCircles("identical circles share every tangent")
    delta = c2.center - c1.center
    D = delta.norm()
    if D <= tol.length_eps:
        return []
    out = []
    # tangent n.p + c0 = 0 with n.C1 + c0 = r1 and n.C2 + c0 = sign * r2
    for sign, kind in ((1.0, SimilitudeKind.EXTERNAL), (-1.0, SimilitudeKind.INTERNAL)):
        k = sign * c2.radius - c1.radius
        gap = D - abs(k)
        if gap < -tol.length_eps:
            continue
        h = math.sqrt(max(D * D - k * k, 0.0)) if gap > tol.length_eps else 0.0
        for hs in ((1.0, -1.0) if h > 0.0 else (1.0,)):
            n = (delta * k + delta.perp() * (hs * h)) / (D * D)
            n = n.unit()
            c0 = c1.radius - n.dot(c1.center)
            out.append((Line(n, -c0), kind))
    out.sort(key=lambda lk: (math.atan2(lk[0].normal.y, lk[0].normal.x), lk[0].offset))
    return out


def _central_conic(focus: Point, other: Point, semi_axis: float, branch: int | None = None) -> Conic:
    """Ellipse (sum) or hyperbola (difference) with foci ``focus``/``other``
    and semi-major axis ``semi_axis``, expressed around ``focus``."""
    center = midpoint(focus, other)
    c = distance(focus, other) / 2.0
    if c <= DEFAULT_TOL.length_eps:
        raise InvalidConic("coincident foci describe a circle, not a focus-directrix conic")
    u = (focus - center) / c
    e = c / semi_axis
    directrix = Line.from_point_normal(center + u * (semi_axis / e), u)
    return Conic(focus, directrix, e, branch)


def parabola_locus(c: Circle, l: Line, tol: Tolerance = DEFAULT_TOL) -> Conic:
    """Centers of circles tangent to ``l`` and externally tangent to ``c``
    (``l`` touching ``c``): a parabola focused at ``c.center`` with its vertex
    at the point of contact."""
    s = l.signed_distance(c.center)
    if abs(abs(s) - c.radius) > tol.residual_eps:
        raise LineNotTangent(f"{l} is not tangent to {c}")
    side = 1.0 if s > 0 else -1.0
    directrix = Line(l.normal, l.offset - side * c.radius)
    return Conic(c.center, directrix, 1.0)


def enclosing_locus(enclosing: Circle, touching: Circle, focus: Point | None = None) -> Conic:
    """Centers of circles inside ``enclosing`` (internally tangent) and
    externally tangent to ``touching``.

    The focal sum is ``R + r``; the foci are the two centers.  ``focus``
    picks which one becomes the conic's focus (default ``touching.center``).
    """
    d = distance(enclosing.center, touching.center)
    total = enclosing.radius + touching.radius
    if d >= total:
        raise InvalidConic("the circles are too far apart for an elliptic locus")
    first = touching.center if focus is None else focus
    if distance(first, touching.center) <= DEFAULT_TOL.length_eps:
        first, second = touching.center, enclosing.center
    elif distance(first, enclosing.center) <= DEFAULT_TOL.length_eps:
        first, second = enclosing.center, touching.center
    else:
        raise GeometryError("focus must be one of the two centers")
    return _central_conic(first, second, total / 2.0)


def ellipse_locus(
    outer: Circle, inner: Circle, focus: Point | None = None, tol: Tolerance = DEFAULT_TOL
) -> Conic:
    """Locus for two internally tangent nested circles; passes through their
    contact point, where it has a vertex.  ``focus`` defaults to ``inner.center``."""
    d = distance(outer.center, inner.center)
    if inner.radius >= outer.radius or abs(d - (outer.radius - inner.radius)) > tol.residual_eps:
        raise NotInternallyTangent(f"{inner} is not internally tangent to {outer}")
    return enclosing_locus(outer, inner, focus)


def hyperbola_locus(c1: Circle, c2: Circle, through: Point, tol: Tolerance = DEFAULT_TOL) -> Conic:
    """Centers of circles externally tangent to both ``c1`` and ``c2``.

    The conic is focused at ``c2.center``; :attr:`Conic.branch` marks the
    branch that carries the locus (the one containing ``through``).
    Equal radii degenerate to the perpendicular bisector and raise
    :class:`DegenerateFoci`.
    """
    r1, r2 = c1.radius, c2.radius
    if abs(r1 - r2) <= tol.rel_eps * max(r1, r2):
        raise DegenerateFoci("equal radii: the locus is the perpendicular bisector")
    if distance(c1.center, c2.center) <= abs(r1 - r2):
        raise DegenerateFoci("one circle encloses the other: no hyperbolic locus")
    diff = distance(through, c1.center) - distance(through, c2.center)
    if abs(diff - (r1 - r2)) > tol.residual_eps:
        raise GeometryError(f"{through} is not on the locus branch")
    branch = 1 if r1 > r2 else -1
    return _central_conic(c2.center, c1.center, abs(r1 - r2) / 2.0, branch)


# -- shared-focus route -------------------------------------------------------


def shared_focus_candidates(
    k1: Conic, k2: Conic, inv: Circle, tol: Tolerance = DEFAULT_TOL
) -> list[tuple[Point, Line, SimilitudeKind]]:
    """Poles of the common tangents of the two reciprocal circles, with the
    tangent that produced each pole.  Tangents through the focus (points at
    infinity) are skipped."""
    if distance(k1.focus, inv.center) > tol.length_eps or distance(k2.focus, inv.center) > tol.length_eps:
        raise FociDiffer("both conics must be focused at the inversion center")
    g1 = dual_of_conic(k1, inv, tol)
    g2 = dual_of_conic(k2, inv, tol)
    out = []
    for line, kind in common_tangents(g1, g2, tol):
        if line.distance(inv.center) <= tol.length_eps:
            continue
        p = pole_of_line(line, inv, tol)
        scale = max(1.0, distance(p, inv.center))
        if k1.residual(p) <= tol.residual_eps * scale and k2.residual(p) <= tol.residual_eps * scale:
            out.append((p, line, kind))
    out.sort(key=lambda t: (t[0].x, t[0].y))
    return out


def intersect_shared_focus(k1: Conic, k2: Conic, inv: Circle, tol: Tolerance = DEFAULT_TOL) -> list[Point]:
    return [p for p, _, _ in shared_focus_candidates(k1, k2, inv, tol)]


# -- pencil-method oracle -----------------------------------------------------


def _adjugate(m: np.ndarray) -> np.ndarray:
    a = np.empty((3, 3))
    for i in range(3):
        for j in range(3):
            minor = np.delete(np.delete(m, i, axis=0), j, axis=1)
            a[j, i] = (-1) ** (i + j) * (minor[0, 0] * minor[1, 1] - minor[0, 1] * minor[1, 0])
    return a


def _cross_matrix(p: np.ndarray) -> np.ndarray:
    return np.array([[0.0, p[2], -p[1]], [-p[2], 0.0, p[0]], [p[1], -p[0], 0.0]])


def _split_degenerate(c: np.ndarray) -> list[np.ndarray] | None:
    """Split a rank <= 2 symmetric conic into two real lines, ``None`` if the
    lines are complex."""
    scale = np.abs(c).max()
    if scale == 0.0:
        return None
    c = c / scale
    b = _adjugate(c)
    if np.abs(b).max() <= 1e-12:
        i = int(np.argmax(np.abs(np.diag(c))))
        if abs(c[i, i]) <= 1e-14:
            return None
        l = c[:, i] / math.sqrt(abs(c[i, i]))
        return [l, l]
    i = int(np.argmax(np.abs(np.diag(b))))
    if b[i, i] > 1e-12:
        return None
    beta = math.sqrt(max(-b[i, i], 0.0))
    if beta == 0.0:
        return None
    p = b[:, i] / beta
    a = c + _cross_matrix(p)
    r, s = np.unravel_index(int(np.argmax(np.abs(a))), a.shape)
    return [a[r, :].copy(), a[:, s].copy()]


def _line_conic_roots(l: np.ndarray, m: np.ndarray) -> list[tuple[np.ndarray, int]]:
    """Real points of line ``l`` (homogeneous) on conic ``m`` with multiplicity."""
    nrm = math.hypot(l[0], l[1])
    if nrm <= 1e-14:
        return []
    a, b, c = l / nrm
    p0 = np.array([-a * c, -b * c, 1.0])
    d = np.array([-b, a, 0.0])
    q2 = d @ m @ d
    q1 = 2.0 * (d @ m @ p0)
    q0 = p0 @ m @ p0
    size = abs(q2) + abs(q1) + abs(q0)
    if abs(q2) <= 1e-13 * size:
        if abs(q1) <= 1e-13 * size:
            return []
        return [(p0 - d * (q0 / q1), 1)]
    disc = q1 * q1 - 4.0 * q2 * q0
    guard = 1e-12 * (q1 * q1 + 4.0 * abs(q2 * q0))
    if disc < -guard:
        return []
    if disc <= guard:
        return [(p0 + d * (-q1 / (2.0 * q2)), 2)]
    sq = math.sqrt(disc)
    # stable quadratic roots
    t1 = (-q1 - math.copysign(sq, q1)) / (2.0 * q2)
    t2 = q0 / (q2 * t1) if t1 != 0.0 else (-q1 + sq) / (2.0 * q2)
    return [(p0 + d * t1, 1), (p0 + d * t2, 1)]


def _quad(m: np.ndarray, x: float, y: float) -> float:
    v = np.array([x, y, 1.0])
    return float(v @ m @ v)


def _polish(m1: np.ndarray, m2: np.ndarray, x: float, y: float, steps: int = 30) -> tuple[float, float]:
    for _ in range(steps):
        f = np.array([_quad(m1, x, y), _quad(m2, x, y)])
        v = np.array([x, y, 1.0])
        j = 2.0 * np.array([(m1 @ v)[:2], (m2 @ v)[:2]])
        det = np.linalg.det(j)
        if abs(det) <= 1e-12 * (np.abs(j).max() ** 2 + 1e-300):
            break
        dx, dy = np.linalg.solve(j, -f)
        x, y = x + dx, y + dy
        if math.hypot(dx, dy) <= 1e-16 * (1.0 + math.hypot(x, y)):
            break
    return x, y


def intersect_quadratics(
    m1: np.ndarray, m2: np.ndarray, accept: float = 1e-9
) -> list[tuple[Point, int]]:
    """Real intersections of two conics given as symmetric 3x3 matrices.

    Returns ``(point, multiplicity)`` pairs sorted by ``(x, y)``; points closer
    than ``MERGE_RADIUS`` are merged with multiplicity 2.
    """
    m1 = np.asarray(m1, dtype=float)
    m2 = np.asarray(m2, dtype=float)
    m1 = m1 / np.linalg.norm(m1)
    m2 = m2 / np.linalg.norm(m2)
    # det(m1 + t m2) = det m1 + t tr(adj(m1) m2) + t^2 tr(m1 adj(m2)) + t^3 det m2
    coeffs = np.array([
        np.linalg.det(m2),
        np.trace(m1 @ _adjugate(m2)),
        np.trace(_adjugate(m1) @ m2),
        np.linalg.det(m1),
    ])
    if np.abs(coeffs).max() <= 1e-14:
        raise IllConditioned("the two conics are (nearly) proportional")
    members = []
    lead = int(np.argmax(np.abs(coeffs) > 1e-14))
    for root in np.roots(coeffs[lead:]):
        if abs(root.imag) <= 1e-7 * (1.0 + abs(root.real)):
            members.append(m1 + root.real * m2)
    if abs(coeffs[0]) <= 1e-12:
        # root at infinity: m2 itself is degenerate
        members.append(m2.copy())

    best: list[tuple[Point, int]] = []
    for member in members:
        lines = _split_degenerate(member)
        if lines is None:
            continue
        found = []
        for l in lines:
            for h, mult in _line_conic_roots(l, m1):
                x, y = _polish(m1, m2, h[0], h[1])
                if abs(_quad(m1, x, y)) <= accept and abs(_quad(m2, x, y)) <= accept:
                    found.append((x, y, mult))
        merged = _merge(found)
        if sum(m for _, m in merged) > sum(m for _, m in best):
            best = merged
    return best


def _merge(found: list[tuple[float, float, int]]) -> list[tuple[Point, int]]:
    found = sorted(found)
    groups: list[list] = []
    for x, y, mult in found:
        for g in groups:
            if math.hypot(g[0] - x, g[1] - y) <= MERGE_RADIUS:
                g[2] = min(g[2] + mult, 2)
                break
        else:
            groups.append([x, y, mult])
    pts = [(Point(x, y), mult) for x, y, mult in groups]
    pts.sort(key=lambda pm: (pm[0].x, pm[0].y))
    return pts


def _normalizing_frame(*conics: Conic) -> tuple[Point, float]:
    pts = [k.focus for k in conics]
    shift = Point(sum(p.x for p in pts) / len(pts), sum(p.y for p in pts) / len(pts))
    scale = max(k.focal_parameter * k.eccentricity for k in conics)
    return shift, scale


def _to_frame(m: np.ndarray, shift: Point, scale: float) -> np.ndarray:
    t = np.array([[scale, 0.0, shift.x], [0.0, scale, shift.y], [0.0, 0.0, 1.0]])
    return t.T @ m @ t


def intersect_numeric(k1: Conic, k2: Conic, with_multiplicity: bool = False):
    """All real intersection points of two conics by the pencil method.

    Works in a translated/rescaled frame so the polished residual is
    meaningful regardless of the conics' size.
    """
    if not isinstance(k1, Conic) or not isinstance(k2, Conic):
        raise TypeError("intersect_numeric takes Conic instances")
    shift, scale = _normalizing_frame(k1, k2)
    raw = intersect_quadratics(_to_frame(k1.matrix(), shift, scale), _to_frame(k2.matrix(), shift, scale))
    out = [(shift + p * scale, mult) for p, mult in raw]
    if with_multiplicity:
        return out
    return [p for p, _ in out]


def intersect_line_conic(l: Line, k: Conic) -> list[Point]:
    """Real points of ``l`` on ``k``, sorted by (x, y)."""
    shift, scale = _normalizing_frame(k)
    m = _to_frame(k.matrix(), shift, scale)
    # line in the normalized frame: n.(shift + s q) = offset
    hom = np.array([l.normal.x * scale, l.normal.y * scale, l.normal.dot(shift) - l.offset])
    pts = [shift + Point(h[0], h[1]) * scale for h, _ in _line_conic_roots(hom, m)]
    return sorted(pts, key=lambda p: (p.x, p.y))
