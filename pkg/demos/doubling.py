"""
Cousins in the doubling arbelos
===============================

Add circles centered at the arbelos ends A1, A2 passing through M.  The
circle inside the outer circle and outside both new circles has the twin
radius.  The twin-cousins obey 1/s1 + 1/s2 = 3 (1/R1 + 1/R2).
"""

from polartwins.arbelos import (
    construct_cousin_icircle,
    construct_twin_cousins,
    make_doubling,
    twin_cousin_radii,
    twin_radius,
    verify,
)

for r1, r2 in ((2, 1), (1, 1), (5, 0.3)):
    d = make_doubling(r1, r2)
    cousin = construct_cousin_icircle(d)
    print(f"R1={r1}, R2={r2}")
    print(f"  cousin i-circle radius {cousin.circle.radius:.15f}, twin radius {twin_radius(r1, r2):.15f}")
    c1, c2 = construct_twin_cousins(d)
    s1, s2 = c1.circle.radius, c2.circle.radius
    print(f"  twin-cousins {s1:.12f}, {s2:.12f}; closed forms {twin_cousin_radii(r1, r2)}")
    print(f"  1/s1 + 1/s2 = {1 / s1 + 1 / s2:.12f}, 3 (1/R1 + 1/R2) = {3 * (1 / r1 + 1 / r2):.12f}")
    print("  all verified:", all(verify(c).passed for c in (cousin, c1, c2)))
