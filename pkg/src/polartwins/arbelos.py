"""Arbelos constructions by polar reciprocity.

Every construction returns a :class:`Construction`: the resulting circle, the
tangencies it is supposed to satisfy, its closed-form radius, the named
intermediate objects used to build it, and a list of metric identities
(computed value vs. closed form) for :func:`verify` to check.

All arbeloi live in one canonical frame: the outer circle is centered at the
origin, the diameter lies on the x-axis and constructed circles are taken in
the upper half-plane.
"""

from __future__ import annotations

import math
from dataclasses import dataclass, field

from .errors import DegenerateFoci, GeometryError, NonPositiveRadius
from .geom_core import (
    DEFAULT_TOL,
    ORIGIN,
    Circle,
    Line,
    Point,
    Tolerance,
    circle_through_diameter,
    distance,
    intersect_lines,
    invert_point,
    project_point_on_line,
)
from .polarity import dual_of_conic, pole_of_line
from .tangents_loci import (
    Contact,
    TangencyConstraint,
    contact_residuals,
    ellipse_locus,
    enclosing_locus,
    hyperbola_locus,
    intersect_line_conic,
    parabola_locus,
    shared_focus_candidates,
    similitude_centers,
    tangent_lines_from_point,
    tangent_point,
)


@dataclass(frozen=True)
class Arbelos:
    R1: float
    R2: float

    @property
    def O(self) -> Point:
        return ORIGIN

    @property
    def O1(self) -> Point:
        return Point(-self.R2, 0.0)

    @property
    def O2(self) -> Point:
        return Point(self.R1, 0.0)

    @property
    def A1(self) -> Point:
        return Point(-(self.R1 + self.R2), 0.0)

    @property
    def A2(self) -> Point:
        return Point(self.R1 + self.R2, 0.0)

    @property
    def M(self) -> Point:
        return Point(self.R1 - self.R2, 0.0)

    @property
    def outer(self) -> Circle:
        return Circle(self.O, self.R1 + self.R2)

    @property
    def c1(self) -> Circle:
        return Circle(self.O1, self.R1)

    @property
    def c2(self) -> Circle:
        return Circle(self.O2, self.R2)

    @property
    def l(self) -> Line:
        """Common internal tangent of the two inner circles, through M."""
        return Line.vertical(self.R1 - self.R2)

    @property
    def base(self) -> Line:
        return Line.horizontal(0.0)

    def inner(self, side: int) -> Circle:
        return self.c1 if side == 1 else self.c2

    def invariant_residuals(self) -> dict[str, float]:
        return {
            "c1_in_outer": TangencyConstraint(self.outer, Contact.INTERNAL).residual(self.c1),
            "c2_in_outer": TangencyConstraint(self.outer, Contact.INTERNAL).residual(self.c2),
            "c1_c2_external": TangencyConstraint(self.c1, Contact.EXTERNAL).residual(self.c2),
            "l_tangent_c1": abs(self.l.distance(self.O1) - self.R1),
            "l_tangent_c2": abs(self.l.distance(self.O2) - self.R2),
            "c1_touches_outer_at_A1": abs(distance(self.A1, self.O1) - self.R1),
            "c2_touches_outer_at_A2": abs(distance(self.A2, self.O2) - self.R2),
        }


def make_arbelos(R1: float, R2: float) -> Arbelos:
    for name, value in (("R1", R1), ("R2", R2)):
        if not (isinstance(value, (int, float)) and math.isfinite(value) and value > 0):
            raise NonPositiveRadius(f"{name} must be a positive finite number, got {value!r}")
    return Arbelos(float(R1), float(R2))


@dataclass(frozen=True)
class Siblings:
    s1: Circle
    s2: Circle


def make_siblings(a: Arbelos) -> Siblings:
    return Siblings(circle_through_diameter(a.O1, a.M), circle_through_diameter(a.O2, a.M))


@dataclass(frozen=True)
class DoublingArbelos:
    """Arbelos plus the circles centered at A1 and A2 passing through M."""

    base: Arbelos
    big1: Circle
    big2: Circle

    @classmethod
    def from_arbelos(cls, a: Arbelos) -> DoublingArbelos:
        return cls(a, Circle(a.A1, distance(a.A1, a.M)), Circle(a.A2, distance(a.A2, a.M)))

    def big(self, side: int) -> Circle:
        return self.big1 if side == 1 else self.big2


def make_doubling(R1: float, R2: float) -> DoublingArbelos:
    return DoublingArbelos.from_arbelos(make_arbelos(R1, R2))


@dataclass
class Construction:
    name: str
    circle: Circle
    constraints: list[TangencyConstraint]
    expected_radius: float
    witnesses: dict = field(default_factory=dict)
    identities: list[tuple[str, float, float]] = field(default_factory=list)


@dataclass
class VerificationReport:
    name: str
    center: Point
    radius: float
    expected_radius: float
    radius_rel_error: float
    constraints: list[dict]
    identities: list[dict]
    status: str

    @property
    def passed(self) -> bool:
        return self.status == "passed"

    def max_residual(self) -> float:
        return max((c["residual"] for c in self.constraints), default=0.0)

    def max_identity_error(self) -> float:
        return max((i["abs_error"] for i in self.identities), default=0.0)

    def to_dict(self) -> dict:
        return {
            "name": self.name,
            "center": [self.center.x, self.center.y],
            "radius": self.radius,
            "expected_radius": self.expected_radius,
            "radius_rel_error": self.radius_rel_error,
            "constraints": [dict(c) for c in self.constraints],
            "identities": [dict(i) for i in self.identities],
            "status": self.status,
        }


def verify(c: Construction, tol: Tolerance = DEFAULT_TOL) -> VerificationReport:
    """Evaluate every tangency residual and registered identity.  Never raises."""
    ok = True
    constraints = []
    for k in c.constraints:
        try:
            res = float(k.residual(c.circle))
        except Exception:  # a malformed constraint is a failed check, not a crash
            res = math.inf
        if not res <= tol.residual_eps:
            ok = False
        constraints.append({"target": k.label, "kind": k.contact.value, "residual": res})
    identities = []
    for name, lhs, rhs in c.identities:
        err = abs(lhs - rhs)
        if not err <= tol.rel_eps * max(1.0, abs(lhs), abs(rhs)):
            ok = False
        identities.append({"name": name, "lhs": lhs, "rhs": rhs, "abs_error": err})
    if c.expected_radius:
        rel = abs(c.circle.radius - c.expected_radius) / abs(c.expected_radius)
    else:
        rel = math.inf
    if not rel <= tol.rel_eps:
        ok = False
    return VerificationReport(
        name=c.name,
        center=c.circle.center,
        radius=c.circle.radius,
        expected_radius=c.expected_radius,
        radius_rel_error=rel,
        constraints=constraints,
        identities=identities,
        status="passed" if ok else "failed",
    )


# -- closed forms ---------------------------------------------------------------


def twin_radius(R1: float, R2: float) -> float:
    return R1 * R2 / (R1 + R2)


def icircle_radius(R1: float, R2: float) -> float:
    return R1 * R2 * (R1 + R2) / (R1 * R1 + R1 * R2 + R2 * R2)


def twin_cousin_radii(R1: float, R2: float) -> tuple[float, float]:
    return R1 * R2 / (R1 + 2 * R2), R1 * R2 / (R2 + 2 * R1)


def _pick_upper(candidates, build, constraints):
    """Among candidate centers in the upper half-plane, keep the circle that
    best satisfies ``constraints``."""
    best = None
    for cand in candidates:
        point = cand[0]
        if point.y <= 0.0:
            continue
        try:
            circle = build(point)
        except GeometryError:
            continue
        worst = max(k.residual(circle) for k in constraints)
        if best is None or worst < best[0]:
            best = (worst, cand, circle)
    if best is None:
        raise GeometryError("no admissible intersection in the upper half-plane")
    return best[1], best[2]


# -- twins ------------------------------------------------------------------------


def dual_circles_for_twin(a: Arbelos, side: int, tol: Tolerance = DEFAULT_TOL):
    """Reciprocals, about the inner circle of ``side``, of the two loci whose
    intersection is that side's twin center.

    Returns ``(ellipse_dual, parabola_dual, similitude)`` where similitude is
    the external similitude center of the two circles (the other inner center).
    """
    inv = a.inner(side)
    ellipse = ellipse_locus(a.outer, inv, focus=inv.center, tol=tol)
    parabola = parabola_locus(inv, a.l, tol)
    ellipse_dual = dual_of_conic(ellipse, inv, tol)
    parabola_dual = dual_of_conic(parabola, inv, tol)
    external, _ = similitude_centers(ellipse_dual, parabola_dual, tol)
    if external is None:
        raise GeometryError("dual circles are congruent")
    return ellipse_dual, parabola_dual, external.point


def _twin(a: Arbelos, side: int, tol: Tolerance) -> Construction:
    sib = make_siblings(a)
    this, other = (a.c1, a.c2) if side == 1 else (a.c2, a.c1)
    # tangent from the other inner center to the sibling on this side
    sibling = sib.s1 if side == 1 else sib.s2
    tangent = tangent_lines_from_point(other.center, sibling, tol)[1]
    foot = project_point_on_line(this.center, tangent)
    D = pole_of_line(tangent, this, tol)
    r = distance(this.center, D) - this.radius
    circle = Circle(D, r)
    R1, R2 = a.R1, a.R2
    Ra, Rb = (R1, R2) if side == 1 else (R2, R1)
    i = str(side)
    j = "2" if side == 1 else "1"
    constraints = [
        TangencyConstraint(this, Contact.EXTERNAL, f"O{i}"),
        TangencyConstraint(a.outer, Contact.INTERNAL, "O"),
        TangencyConstraint(a.l, Contact.LINE, "l"),
    ]
    ellipse_dual, parabola_dual, sim = dual_circles_for_twin(a, side, tol)
    # same center through the intersection of the two loci
    loci = (
        ellipse_locus(a.outer, this, focus=this.center, tol=tol),
        parabola_locus(this, a.l, tol),
    )
    cross = [p for p in (c[0] for c in shared_focus_candidates(*loci, this, tol)) if p.y > 0]
    gap = min((distance(p, D) for p in cross), default=math.inf)
    # with half radii ra, rb the foot and pole distances close in on the twin radius
    ra, rb = Ra / 2, Rb / 2
    foot_dist = distance(this.center, foot)
    pole_dist = distance(this.center, D)
    identities = [
        (f"O{i}P{i}", foot_dist, 2 * ra * (ra + rb) / (2 * rb + ra)),
        (f"O{i}D{i}", pole_dist, 2 * ra * (2 * rb + ra) / (ra + rb)),
        (f"O{i}P{i}*O{i}D{i}", foot_dist * pole_dist, Ra * Ra),
        ("harmonic", 1.0 / r, 1.0 / R1 + 1.0 / R2),
        ("similitude_is_O" + j, distance(sim, other.center), 0.0),
        ("loci_intersection_gap", gap, 0.0),
    ]
    witnesses = {
        "tangent": tangent,
        "T": tangent_point(tangent, sibling),
        "P": foot,
        "D": D,
        "sibling": sibling,
        "ellipse_dual": ellipse_dual,
        "parabola_dual": parabola_dual,
        "similitude": sim,
        "ellipse": loci[0],
        "parabola": loci[1],
        "contact_vs_O" + j: contact_residuals(circle, other),
    }
    return Construction(f"twin_{side}", circle, constraints, twin_radius(R1, R2), witnesses, identities)


def construct_twins(a: Arbelos, tol: Tolerance = DEFAULT_TOL) -> tuple[Construction, Construction]:
    """Twin centers as poles (in each inner circle) of the upper tangent drawn
    from the opposite inner center to the sibling.

    Each twin is externally tangent to its own inner circle, internally
    tangent to the outer circle and tangent to ``l``.  The pair registers the
    identity ``|O2D2| - R2 = |O1D1| - R1``.
    """
    t1, t2 = _twin(a, 1, tol), _twin(a, 2, tol)
    lhs = distance(a.O2, t2.circle.center) - a.R2
    rhs = distance(a.O1, t1.circle.center) - a.R1
    for t in (t1, t2):
        t.identities.append(("twin_congruence", lhs, rhs))
    return t1, t2


def construct_siblings(a: Arbelos, tol: Tolerance = DEFAULT_TOL) -> tuple[Construction, Construction]:
    sib = make_siblings(a)
    out = []
    for side, s, other, inner in ((1, sib.s1, sib.s2, a.c1), (2, sib.s2, sib.s1, a.c2)):
        j = 2 if side == 1 else 1
        constraints = [
            TangencyConstraint(inner, Contact.INTERNAL, f"O{side}"),
            TangencyConstraint(other, Contact.EXTERNAL, f"S{j}"),
        ]
        witnesses = {"diameter": (inner.center, a.M)}
        identities = [(f"S{side}_through_M", distance(s.center, a.M), s.radius)]
        out.append(Construction(f"sibling_{side}", s, constraints, inner.radius / 2, witnesses, identities))
    return out[0], out[1]


def construct_duals(a: Arbelos, tol: Tolerance = DEFAULT_TOL) -> tuple[Construction, Construction]:
    """The ellipse reciprocals of the twin loci as checked constructions.

    Each is internally tangent to the inner circle at the arbelos end point,
    has diameter ``(2Ra^2 + Ra Rb) / (Ra + Rb)``, and is homothetic to the
    sibling from the other inner center.
    """
    out = []
    for side in (1, 2):
        inner = a.inner(side)
        other = a.inner(3 - side)
        Ra, Rb = inner.radius, other.radius
        e_dual, p_dual, sim = dual_circles_for_twin(a, side, tol)
        end = a.A1 if side == 1 else a.A2
        far = invert_point(other.center, inner, tol)
        ratio_centers = distance(e_dual.center, sim) / distance(p_dual.center, sim)
        identities = [
            ("ellipse_dual_diameter", 2 * e_dual.radius, (2 * Ra * Ra + Ra * Rb) / (Ra + Rb)),
            ("parabola_dual_radius", p_dual.radius, Ra / 2),
            ("homothety_ratio_centers", ratio_centers, (2 * Ra + Rb) / (Ra + Rb)),
            ("homothety_ratio_radii", e_dual.radius / p_dual.radius, (2 * Ra + Rb) / (Ra + Rb)),
            (f"similitude_is_O{3 - side}", distance(sim, other.center), 0.0),
            ("diameter_end_is_inverse", distance(e_dual.center * 2 - end, far), 0.0),
        ]
        constraints = [
            TangencyConstraint(inner, Contact.INTERNAL, f"O{side}"),
            TangencyConstraint(a.outer, Contact.INTERNAL, "O"),
        ]
        witnesses = {"parabola_dual": p_dual, "similitude": sim, "inverse_of_other_center": far}
        expected = (2 * Ra * Ra + Ra * Rb) / (2 * (Ra + Rb))
        out.append(Construction(f"dual_{side}", e_dual, constraints, expected, witnesses, identities))
    return out[0], out[1]


# -- i-circle -----------------------------------------------------------------------


def construct_icircle(a: Arbelos, tol: Tolerance = DEFAULT_TOL) -> Construction:
    """Circle tangent to all three arbelos circles, centered at the meet of
    two ellipses focused at O, found as the pole in the outer circle of a
    common tangent of their reciprocal circles."""
    inv = a.outer
    e1 = ellipse_locus(a.outer, a.c1, focus=a.O, tol=tol)
    e2 = ellipse_locus(a.outer, a.c2, focus=a.O, tol=tol)
    constraints = [
        TangencyConstraint(a.outer, Contact.INTERNAL, "O"),
        TangencyConstraint(a.c1, Contact.EXTERNAL, "O1"),
        TangencyConstraint(a.c2, Contact.EXTERNAL, "O2"),
    ]
    out_radius = inv.radius
    cand, circle = _pick_upper(
        shared_focus_candidates(e1, e2, inv, tol),
        lambda p: Circle(p, out_radius - distance(p, a.O)),
        constraints,
    )
    D, tangent, kind = cand
    R1, R2 = a.R1, a.R2
    OP = tangent.distance(a.O)
    OD = distance(a.O, D)
    S = R1 * R1 + R1 * R2 + R2 * R2
    g1, g2 = dual_of_conic(e1, inv, tol), dual_of_conic(e2, inv, tol)
    external, internal = similitude_centers(g1, g2, tol)
    H = (external if kind.value == "external" else internal)
    identities = [
        ("OP", OP, (R1 + R2) * S / (R1 * R1 + R2 * R2)),
        ("OD*OP", OD * OP, (R1 + R2) ** 2),
        ("R", circle.radius, (R1 + R2) - (R1 + R2) ** 2 / OP),
    ]
    witnesses = {
        "tangent": tangent,
        "P": project_point_on_line(a.O, tangent),
        "D": D,
        "ellipse_1": e1,
        "ellipse_2": e2,
        "dual_1": g1,
        "dual_2": g2,
        "H": None if H is None else H.point,
    }
    return Construction("icircle", circle, constraints, icircle_radius(R1, R2), witnesses, identities)


# -- doubling arbelos --------------------------------------------------------------------


def construct_cousin_icircle(d: DoublingArbelos, tol: Tolerance = DEFAULT_TOL) -> Construction:
    """Circle inside the outer circle and outside both doubling circles.

    Its center lies on an ellipse (foci O, A2) and a hyperbola (foci A1, A2);
    both are reciprocated about the doubling circle at A2.  When R1 == R2 the
    hyperbola collapses to the perpendicular bisector of A1A2 and the center
    is taken on that line instead.
    """
    a = d.base
    constraints = [
        TangencyConstraint(a.outer, Contact.INTERNAL, "O"),
        TangencyConstraint(d.big1, Contact.EXTERNAL, "A1"),
        TangencyConstraint(d.big2, Contact.EXTERNAL, "A2"),
    ]
    outer_r = a.outer.radius
    ellipse = enclosing_locus(a.outer, d.big2, focus=a.A2)
    witnesses: dict = {"ellipse": ellipse, "inversion": d.big2}
    try:
        hyperbola = hyperbola_locus(d.big1, d.big2, a.M, tol)
    except DegenerateFoci:
        bisector = Line.vertical(0.5 * (a.A1.x + a.A2.x))
        cands = [(p,) for p in intersect_line_conic(bisector, ellipse)]
        witnesses.update(bisector=bisector, path="bisector")
    else:
        cands = [
            c for c in shared_focus_candidates(ellipse, hyperbola, d.big2, tol)
            if hyperbola.branch_of(c[0]) == hyperbola.branch
        ]
        witnesses.update(hyperbola=hyperbola, path="duality")
    cand, circle = _pick_upper(cands, lambda p: Circle(p, outer_r - distance(p, a.O)), constraints)
    witnesses["S"] = cand[0]
    if len(cand) > 1:
        witnesses["tangent"] = cand[1]
        witnesses["dual_ellipse"] = dual_of_conic(ellipse, d.big2, tol)
        witnesses["dual_hyperbola"] = dual_of_conic(witnesses["hyperbola"], d.big2, tol)
    R1, R2 = a.R1, a.R2
    identities = [
        ("harmonic", 1.0 / circle.radius, 1.0 / R1 + 1.0 / R2),
        ("focal_difference", distance(cand[0], a.A1) - distance(cand[0], a.A2), 2 * (R1 - R2)),
    ]
    return Construction("cousin_icircle", circle, constraints, twin_radius(R1, R2), witnesses, identities)


def _twin_cousin(d: DoublingArbelos, side: int, tol: Tolerance) -> Construction:
    a = d.base
    inner = a.inner(side)
    big = d.big(side)
    Ra, Rb = (a.R1, a.R2) if side == 1 else (a.R2, a.R1)
    e_outer = ellipse_locus(a.outer, inner, focus=inner.center, tol=tol)
    e_big = ellipse_locus(big, inner, focus=inner.center, tol=tol)
    constraints = [
        TangencyConstraint(a.outer, Contact.INTERNAL, "O"),
        TangencyConstraint(inner, Contact.EXTERNAL, f"O{side}"),
        TangencyConstraint(big, Contact.INTERNAL, "A1" if side == 1 else "A2"),
    ]
    cand, circle = _pick_upper(
        shared_focus_candidates(e_outer, e_big, inner, tol),
        lambda p: Circle(p, distance(p, inner.center) - inner.radius),
        constraints,
    )
    S, tangent, _ = cand
    dual_big = dual_of_conic(e_big, inner, tol)  # centered o1'
    dual_outer = dual_of_conic(e_outer, inner, tol)  # centered o2'
    p = tangent.distance(inner.center)
    i, j = side, 3 - side
    identities = [
        (f"R{i}'", dual_big.radius, 3 * Ra / 4),
        (f"O{i}o{i}'", distance(inner.center, dual_big.center), Ra / 4),
        (f"R{j}'", dual_outer.radius, (2 * Ra * Ra + Ra * Rb) / (2 * (Ra + Rb))),
        (f"O{i}o{j}'", distance(inner.center, dual_outer.center), Ra * Rb / (2 * (Ra + Rb))),
        (f"o{i}'o{j}'", distance(dual_big.center, dual_outer.center), (Ra * Ra + 3 * Ra * Rb) / (4 * (Ra + Rb))),
        ("p", p, Ra * (Ra + 2 * Rb) / (Ra + 3 * Rb)),
    ]
    witnesses = {
        "S": S,
        "tangent": tangent,
        "ellipse_outer": e_outer,
        "ellipse_big": e_big,
        "dual_outer": dual_outer,
        "dual_big": dual_big,
        "contact_vs_other_inner": contact_residuals(circle, a.inner(3 - side)),
    }
    if abs(Ra - Rb) > 1e-6 * (Ra + Rb):
        external, _ = similitude_centers(dual_big, dual_outer, tol)
        witnesses["Omega"] = external.point
        identities.append(("x", distance(external.point, dual_big.center), 3 * Ra * (Ra + 3 * Rb) / (4 * abs(Ra - Rb))))
    expected = twin_cousin_radii(a.R1, a.R2)[side - 1]
    return Construction(f"twin_cousin_{side}", circle, constraints, expected, witnesses, identities)


def construct_twin_cousins(d: DoublingArbelos, tol: Tolerance = DEFAULT_TOL) -> tuple[Construction, Construction]:
    """Twin-cousin ``i`` sits inside the outer circle and the doubling circle
    at ``Ai`` and outside the inner circle ``(Oi)``; its center is the meet of
    two ellipses sharing the focus ``Oi``.  Both register
    ``1/s1 + 1/s2 = 3 (1/R1 + 1/R2)``."""
    c1, c2 = _twin_cousin(d, 1, tol), _twin_cousin(d, 2, tol)
    a = d.base
    total = 1.0 / c1.circle.radius + 1.0 / c2.circle.radius
    for c in (c1, c2):
        c.identities.append(("cousin_sum", total, 3.0 * (1.0 / a.R1 + 1.0 / a.R2)))
    return c1, c2


def construct_humble_circle(a: Arbelos, tol: Tolerance = DEFAULT_TOL) -> Construction:
    """Circle whose diameter is the segment of ``l`` between the diameter line
    and the top side of the right trapeze with parallel sides R1 (at O1) and
    R2 (at O2)."""
    q1 = a.O1 + Point(0.0, a.R1)
    q2 = a.O2 + Point(0.0, a.R2)
    top = Line.through(q1, q2)
    apex = intersect_lines(a.l, top, tol)
    if apex is None:
        raise GeometryError("trapeze top is parallel to l")
    circle = circle_through_diameter(a.M, apex, tol)
    constraints = [TangencyConstraint(a.base, Contact.LINE, "diameter_line")]
    identities = [("parallel_length", distance(a.M, apex), 2 * a.R1 * a.R2 / (a.R1 + a.R2))]
    witnesses = {"trapeze": (a.O1, a.O2, q2, q1), "apex": apex}
    return Construction("humble", circle, constraints, twin_radius(a.R1, a.R2), witnesses, identities)
