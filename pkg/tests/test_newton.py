import math
from fractions import Fraction

import pytest
from hypothesis import given, strategies as st

from quadrindex.newton import (
    PolygonPoint,
    Side,
    hull_oracle,
    lattice_index,
    lower_hull,
    polygon_from_points,
    principal_polygon,
)
from quadrindex.polyring import IntPoly, Quadrinomial, phi_expand

P = PolygonPoint


@st.composite
def point_sets(draw, max_len=9, max_v=12):
    n = draw(st.integers(min_value=1, max_value=max_len))
    js = sorted(draw(st.sets(st.integers(0, n + 3), min_size=1, max_size=n)))
    return [P(j, draw(st.integers(0, max_v))) for j in js]


@given(point_sets())
def test_principal_polygon_matches_brute_force_hull(pts):
    assert polygon_from_points(pts).sides == hull_oracle(pts).sides


@given(point_sets())
def test_hull_is_convex_and_below_every_point(pts):
    hull = lower_hull(pts)
    for a, b, c in zip(hull, hull[1:], hull[2:]):
        assert (b.j - a.j) * (c.v - a.v) - (b.v - a.v) * (c.j - a.j) > 0
    for side in polygon_from_points(pts).sides:
        for q in pts:
            if side.start.j <= q.j <= side.end.j:
                assert q.v >= side.ordinate_at(q.j)


def test_side_data():
    s = Side(P(0, 6), P(4, 0))
    assert (s.length, s.height, s.degree, s.ram_index) == (4, 6, 2, 2)
    assert s.slope == Fraction(-3, 2)
    assert s.slope_str() == "-3/2"
    assert s.ordinate_at(2) == 3


def test_principal_part_stops_at_first_non_negative_slope():
    poly = polygon_from_points([P(0, 3), P(1, 1), P(2, 1), P(3, 0), P(5, 0)])
    assert [(s.start, s.end) for s in poly.sides] == [(P(0, 3), P(1, 1)), (P(1, 1), P(3, 0))]


def test_no_finite_points():
    with pytest.raises(ValueError):
        polygon_from_points([])


def _sides(a, b, c, p, r):
    F = Quadrinomial(a, b, c).poly
    poly = principal_polygon(phi_expand(F, IntPoly.x_minus(r)), p)
    return [((s.start.j, s.start.v), (s.end.j, s.end.v)) for s in poly.sides]


def test_case_one_polygon():
    assert _sides(4913, 867, 119, 2, 1) == [((0, 2), (2, 0))]


def test_case_three_polygon():
    # mu_0 = v2(1 + a + b + c) = 4 here
    assert _sides(0, 0, 15, 2, 1) == [((0, 4), (1, 2)), ((1, 2), (2, 1)), ((2, 1), (4, 0))]


def test_case_five_polygon():
    sides = _sides(2, 6, 55, 2, 1)
    assert sides == [((0, 6), (2, 2)), ((2, 2), (4, 0))]
    F = Quadrinomial(2, 6, 55).poly
    poly = principal_polygon(phi_expand(F, IntPoly.x_minus(1)), 2)
    assert [s.degree for s in poly.sides] == [2, 2]


def _lattice_brute(poly):
    """Points (j, y), j >= 1, y >= 1, on or below the polygon, times deg phi."""
    if not poly.sides:
        return 0
    first, last = poly.sides[0].start.j, poly.sides[-1].end.j
    count = 0
    for j in range(max(first, 1), last + 1):
        side = next(s for s in poly.sides if s.start.j <= j <= s.end.j)
        top = side.ordinate_at(j)
        count += sum(1 for y in range(1, math.ceil(top) + 2) if y <= top)
    return count * poly.phi.degree


@given(point_sets())
def test_lattice_index_against_point_count(pts):
    poly = polygon_from_points(pts)
    assert lattice_index(poly) == _lattice_brute(poly)


@pytest.mark.parametrize("m", [3, 5, 7, 9, 11, 21])
def test_lattice_index_one_side_to_degree_four(m):
    poly = polygon_from_points([P(0, m), P(4, 0)])
    assert lattice_index(poly) == 3 * (m - 1) // 2


def test_lattice_index_calibration():
    assert lattice_index(polygon_from_points([P(0, 2), P(2, 0)])) == 1
    assert lattice_index(polygon_from_points([P(0, 1), P(2, 0)])) == 0
    # deg phi multiplies the count
    poly = polygon_from_points([P(0, 2), P(2, 0)], IntPoly((1, 1, 1)))
    assert lattice_index(poly) == 2
