"""phi-Newton polygons: lower convex hull of (j, v_p(a_j)) and its
negative-slope (principal) part."""

from __future__ import annotations

import math
from dataclasses import dataclass
from fractions import Fraction
from typing import Sequence

from .exactint import INF
from .polyring import IntPoly, PhiExpansion


@dataclass(frozen=True, order=True)
class PolygonPoint:
    j: int
    v: int


@dataclass(frozen=True)
class Side:
    start: PolygonPoint
    end: PolygonPoint

    @property
    def length(self) -> int:
        return self.end.j - self.start.j

    @property
    def height(self) -> int:
        return self.start.v - self.end.v

    @property
    def degree(self) -> int:
        return math.gcd(self.length, self.height)

    @property
    def ram_index(self) -> int:
        return self.length // self.degree

    @property
    def slope(self) -> Fraction:
        return Fraction(-self.height, self.length)

    def slope_str(self) -> str:
        """Exact slope as "-h/e" with h, e coprime."""
        return f"-{self.height // self.degree}/{self.ram_index}"

    def ordinate_at(self, j: int) -> Fraction:
        return self.start.v + self.slope * (j - self.start.j)


@dataclass(frozen=True)
class NewtonPolygon:
    phi: IntPoly
    sides: tuple[Side, ...]
    points: tuple[PolygonPoint, ...] = ()

    @property
    def length(self) -> int:
        return sum(s.length for s in self.sides)

    def vertices(self) -> list[PolygonPoint]:
        if not self.sides:
            return []
        return [self.sides[0].start] + [s.end for s in self.sides]


def expansion_points(exp: PhiExpansion, p: int) -> list[PolygonPoint]:
    pts = []
    for j, a in enumerate(exp.coeffs):
        v = a.content_val(p)
        if v is not INF:
            pts.append(PolygonPoint(j, v))
    return pts


def _cross(o: PolygonPoint, a: PolygonPoint, b: PolygonPoint) -> int:
    return (a.j - o.j) * (b.v - o.v) - (a.v - o.v) * (b.j - o.j)


def lower_hull(points: Sequence[PolygonPoint]) -> list[PolygonPoint]:
    """Vertices of the lower convex hull, left to right; collinear points dropped.

    Points must have distinct abscissae.
    """
    pts = sorted(points)
    hull: list[PolygonPoint] = []
    for pt in pts:
        while len(hull) >= 2 and _cross(hull[-2], hull[-1], pt) <= 0:
            hull.pop()
        hull.append(pt)
    return hull


def _principal(vertices: Sequence[PolygonPoint]) -> list[Side]:
    sides = []
    for a, b in zip(vertices, vertices[1:]):
        if b.v >= a.v:
            break
        sides.append(Side(a, b))
    return sides


def polygon_from_points(points: Sequence[PolygonPoint], phi: IntPoly = IntPoly((0, 1))) -> NewtonPolygon:
    if not points:
        raise ValueError("no finite points: all coefficients vanish")
    return NewtonPolygon(phi, tuple(_principal(lower_hull(points))), tuple(sorted(points)))


def principal_polygon(exp: PhiExpansion, p: int) -> NewtonPolygon:
    return polygon_from_points(expansion_points(exp, p), exp.phi)


def hull_oracle(points: Sequence[PolygonPoint], phi: IntPoly = IntPoly((0, 1))) -> NewtonPolygon:
    """Brute force: (P, Q) is a hull side iff every point lies on or above
    line PQ and no point on that line lies outside [P, Q]."""
    pts = sorted(points)
    if not pts:
        raise ValueError("no finite points")
    edges = []
    for i, P in enumerate(pts):
        for Q in pts[i + 1 :]:
            crosses = [_cross(P, Q, R) for R in pts]
            if any(c < 0 for c in crosses):
                continue
            on_line = [R for R, c in zip(pts, crosses) if c == 0]
            if min(on_line) == P and max(on_line) == Q:
                edges.append(Side(P, Q))
    edges.sort(key=lambda s: s.start.j)
    return NewtonPolygon(phi, tuple(s for s in edges if s.height > 0), tuple(pts))


def lattice_index(poly: NewtonPolygon) -> int:
    """deg(phi) times the number of integer points (j, y) with j >= 1 and
    1 <= y lying on or under the principal polygon."""
    total = 0
    for side in poly.sides:
        for j in range(max(side.start.j, 1), side.end.j):
            y = side.ordinate_at(j)
            total += math.floor(y)
    if poly.sides and poly.sides[-1].end.j >= 1:
        total += poly.sides[-1].end.v  # zero whenever the polygon reaches the axis
    return total * max(poly.phi.degree, 1)
