"""Exact predicates, checked against shapely on small integer inputs."""
import math
from fractions import Fraction

from hypothesis import given, settings, strategies as st
from shapely.geometry import LineString, Polygon
from shapely.ops import split

from windrose.geometry import clip_halfplane, direction_at, polygon_area2, pseudo_angle, segment_intersection

coord = st.integers(-6, 6)
point = st.tuples(coord, coord)


@settings(max_examples=300)
@given(point, point, point, point)
def test_segment_intersection_matches_shapely(a, b, c, d):
    if a == b or c == d:
        return
    hit = segment_intersection(a, b, c, d)
    ref = LineString([a, b]).intersection(LineString([c, d]))
    assert (hit is None) == ref.is_empty
    if hit is not None and hit[0] == "point":
        assert ref.geom_type == "Point"
        assert math.isclose(float(hit[1][0]), ref.x, abs_tol=1e-9) and math.isclose(float(hit[1][1]), ref.y, abs_tol=1e-9)
    if hit is not None and hit[0] == "overlap":
        assert ref.geom_type == "LineString" and ref.length > 0


@given(point.filter(lambda p: p != (0, 0)), point.filter(lambda p: p != (0, 0)))
def test_pseudo_angle_orders_like_atan2(p, r):
    def ang(v):
        return math.atan2(v[1], v[0]) % (2 * math.pi)

    if math.isclose(ang(p), ang(r)):
        assert pseudo_angle(*p) == pseudo_angle(*r)
    else:
        assert (pseudo_angle(*p) < pseudo_angle(*r)) == (ang(p) < ang(r))


@given(st.fractions(min_value=0, max_value=Fraction(399, 100)))
def test_direction_round_trip(t):
    assert pseudo_angle(*direction_at(t)) == t


@given(st.integers(-5, 5), st.integers(-5, 5), st.integers(-5, 5))
def test_clip_halfplane_area(a, b, c):
    if not (a or b):
        return
    square = [(0, 0), (4, 0), (4, 4), (0, 4)]
    out = clip_halfplane(square, lambda p: a * p[0] + b * p[1] + c)
    big = 100
    if b:
        line = LineString([(-big, (-c + a * big) / b), (big, (-c - a * big) / b)])
    else:
        line = LineString([(-c / a, -big), (-c / a, big)])
    pieces = split(Polygon(square), line).geoms
    kept = sum(g.area for g in pieces if a * g.representative_point().x + b * g.representative_point().y + c > 0)
    got = abs(float(polygon_area2(out))) / 2 if len(out) >= 3 else 0.0
    assert math.isclose(got, kept, abs_tol=1e-9)
