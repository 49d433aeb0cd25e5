"""
Archimedes' twins from two conics
=================================

Each twin's center sits where an ellipse meets a parabola, both focused at
the center of an inner circle.  Reciprocating both conics in that inner
circle turns them into two circles; the twin center is the pole of one of
their common tangents.
"""

from polartwins.arbelos import construct_twins, make_arbelos, twin_radius, verify
from polartwins.tangents_loci import intersect_numeric

# an asymmetric arbelos: inner radii 2 and 1
a = make_arbelos(2.0, 1.0)
print("outer circle:", a.outer)
print("common tangent at M:", a.l)

twin1, twin2 = construct_twins(a)
for t in (twin1, twin2):
    print(f"{t.name}: center ({t.circle.center.x:.12f}, {t.circle.center.y:.12f}), radius {t.circle.radius:.15f}")
print("closed form R1 R2 / (R1 + R2) =", twin_radius(a.R1, a.R2))

# the two loci that cross at the first twin's center
ellipse, parabola = twin1.witnesses["ellipse"], twin1.witnesses["parabola"]
print("ellipse eccentricity", ellipse.eccentricity, "parabola eccentricity", parabola.eccentricity)

# a pencil-of-conics solve, no duality involved, lands on the same point
upper = [p for p in intersect_numeric(ellipse, parabola) if p.y > 0]
print("pencil-method meeting point:", upper)

# every tangency the construction promises, with its residual
report = verify(twin1)
for k in report.constraints:
    print(f"  {k['kind']:8s} to {k['target']:3s} residual {k['residual']:.2e}")
for i in report.identities:
    print(f"  {i['name']:25s} {i['lhs']:.12f} vs {i['rhs']:.12f}")
print("status:", report.status)
