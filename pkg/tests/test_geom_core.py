import math

import pytest
from hypothesis import given, strategies as st

from polartwins.errors import CenterInversion, DegenerateDiameter
from polartwins.geom_core import (
    ORIGIN,
    Circle,
    Line,
    Point,
    Tolerance,
    circle_through_diameter,
    distance,
    intersect_line_circle,
    intersect_lines,
    invert_point,
    project_point_on_line,
    reflect_point_in_line,
)

coord = st.floats(-50, 50, allow_nan=False)
points = st.builds(Point, coord, coord)
UNIT = Circle(ORIGIN, 1.0)


def lines():
    angle = st.floats(0, 2 * math.pi)
    return st.builds(lambda t, c: Line(Point(math.cos(t), math.sin(t)), c), angle, coord)


def test_tolerance_rejects_nonpositive():
    with pytest.raises(ValueError):
        Tolerance(length_eps=0)
    with pytest.raises(ValueError):
        Tolerance(residual_eps=-1)


def test_point_rejects_nan():
    with pytest.raises(ValueError):
        Point(math.nan, 0)


def test_line_is_normalized():
    l = Line(Point(0, -3), 6)
    assert l.normal.isclose(Point(0, 1))
    assert l.offset == pytest.approx(-2)
    assert Line.horizontal(-2) == l


def test_line_through_coincident_points_fails():
    with pytest.raises(ValueError):
        Line.through(Point(1, 1), Point(1, 1))


@pytest.mark.parametrize(
    "p, l, expected",
    [
        (Point(0, 0), Line.vertical(1), Point(1, 0)),
        (Point(3, 4), Line.horizontal(0), Point(3, 0)),
        (Point(1, 7), Line.vertical(1), Point(1, 7)),
    ],
)
def test_projection_examples(p, l, expected):
    assert project_point_on_line(p, l).isclose(expected)


@given(points, lines())
def test_projection_lies_on_line_and_is_idempotent(p, l):
    q = project_point_on_line(p, l)
    assert l.distance(q) <= 1e-9
    assert project_point_on_line(q, l).isclose(q, Tolerance(length_eps=1e-9))
    # displacement is along the normal
    assert abs((p - q).cross(l.normal)) <= 1e-9 * max(1.0, distance(p, q))


def test_reflection_examples():
    assert reflect_point_in_line(Point(1, 1), Line.horizontal(0)).isclose(Point(1, -1))
    assert reflect_point_in_line(Point(2, 5), Line.vertical(2)).isclose(Point(2, 5))


@given(points, lines())
def test_reflection_is_an_involution(p, l):
    back = reflect_point_in_line(reflect_point_in_line(p, l), l)
    assert distance(back, p) <= 1e-9


@pytest.mark.parametrize(
    "p, inv, expected",
    [
        (Point(2, 0), UNIT, Point(0.5, 0)),
        (Point(0, 4), Circle(ORIGIN, 2), Point(0, 1)),
        (Point(0.6, 0.8), UNIT, Point(0.6, 0.8)),
    ],
)
def test_inversion_examples(p, inv, expected):
    assert invert_point(p, inv).isclose(expected)


def test_inversion_of_center_raises():
    with pytest.raises(CenterInversion):
        invert_point(Point(1, 1), Circle(Point(1, 1), 3))


@given(points, st.floats(0.1, 10))
def test_inversion_is_an_involution(p, radius):
    inv = Circle(Point(0.5, -0.25), radius)
    if distance(p, inv.center) < 1e-3:
        return
    q = invert_point(p, inv)
    assert distance(q, inv.center) * distance(p, inv.center) == pytest.approx(radius**2, rel=1e-12)
    assert (q - inv.center).cross(p - inv.center) == pytest.approx(0, abs=1e-9 * max(1, distance(p, inv.center)))
    assert distance(invert_point(q, inv), p) <= 1e-9 * max(1.0, distance(p, ORIGIN))


def test_circle_through_diameter_examples():
    c = circle_through_diameter(Point(0, 0), Point(2, 0))
    assert c.isclose(Circle(Point(1, 0), 1))
    assert circle_through_diameter(Point(-1, 0), Point(1, 0)).isclose(UNIT)
    with pytest.raises(DegenerateDiameter):
        circle_through_diameter(Point(1, 2), Point(1, 2))


def test_diameter_from_end_point_to_inverted_center():
    # R1 = R2 = 1: A1 = (-2, 0), the inverse of O2 = (1, 0) in (O1) is (-1/2, 0)
    inner = Circle(Point(-1, 0), 1)
    far = invert_point(Point(1, 0), inner)
    c = circle_through_diameter(Point(-2, 0), far)
    assert c.radius == pytest.approx(0.75, rel=1e-12)


def test_intersect_lines():
    p = intersect_lines(Line.vertical(1), Line.horizontal(2))
    assert p.isclose(Point(1, 2))
    assert intersect_lines(Line.vertical(1), Line.vertical(3)) is None


def test_intersect_line_circle_counts():
    assert len(intersect_line_circle(Line.horizontal(0), UNIT)) == 2
    touch = intersect_line_circle(Line.horizontal(1), UNIT)
    assert len(touch) == 1 and touch[0].isclose(Point(0, 1))
    assert intersect_line_circle(Line.horizontal(2), UNIT) == []


def test_circle_validation_and_power():
    with pytest.raises(ValueError):
        Circle(ORIGIN, 0)
    c = Circle(Point(1, 1), 2)
    assert c.power(Point(1, 1)) == pytest.approx(-4)
    assert c.contains(c.point_at(1.234))
