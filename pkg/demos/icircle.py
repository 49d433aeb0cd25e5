"""
The inscribed circle of the arbelos
===================================

Both ellipses of centers tangent to the outer circle and to one inner circle
share the focus O.  Inverting in the outer circle reciprocates them into
circles whose common tangent has the i-circle center as its pole.
"""

from polartwins.arbelos import construct_icircle, icircle_radius, make_arbelos, verify

for r1, r2 in ((1, 1), (2, 1), (0.4, 3.5)):
    c = construct_icircle(make_arbelos(r1, r2))
    print(f"R1={r1}, R2={r2}: radius {c.circle.radius:.15f} (closed form {icircle_radius(r1, r2):.15f})")
    ids = {i["name"]: (i["lhs"], i["rhs"]) for i in verify(c).identities}
    for name, (lhs, rhs) in ids.items():
        print(f"    {name}: {lhs:.12f} = {rhs:.12f}")
