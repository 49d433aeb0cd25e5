"""Arbelos circles constructed by pole/polar reciprocity and checked numerically.

Modules: ``geom_core`` (points, lines, circles, inversion), ``polarity``
(poles, polars, circle/conic reciprocals), ``tangents_loci`` (tangents, loci
of tangent circles, conic intersection), ``arbelos`` (the constructions and
their verification), plus ``scene``, ``render``, ``report`` and ``cli``.
"""

__version__ = "0.1.0"
