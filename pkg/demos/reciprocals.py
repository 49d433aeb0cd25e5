"""
Circles and their reciprocal conics
===================================

Taking poles of every tangent of a circle gives a conic focused at the
inversion center.  Its eccentricity is the ratio d / r of the center distance
to the radius, so the shape only depends on where the inversion center sits
relative to the circle.
"""

from polartwins.geom_core import ORIGIN, Circle, Line, Point
from polartwins.polarity import dual_of_circle, dual_of_conic, pole_of_line

unit = Circle(ORIGIN, 1.0)

for circle in (Circle(Point(1, 0), 2), Circle(Point(1, 0), 1), Circle(Point(2, 0), 1)):
    conic = dual_of_circle(circle, unit)
    print(f"{circle} -> {conic.kind.value}, e = {conic.eccentricity}, directrix {conic.directrix}")
    print("   vertices:", [(round(v.x, 12), round(v.y, 12)) for v in conic.vertices()])
    print("   back again:", dual_of_conic(conic, unit))

# a direct check: the pole of one tangent of (2,0) r=1 lies on its reciprocal
circle = Circle(Point(2, 0), 1)
tangent = Line.vertical(3.0)
p = pole_of_line(tangent, unit)
print("pole of x = 3:", p, "focus-directrix defect", dual_of_circle(circle, unit).residual(p))
