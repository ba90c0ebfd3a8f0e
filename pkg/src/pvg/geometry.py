"""Exact rational plane geometry.

Every predicate here works on arbitrary-precision rationals and returns
exact answers; there is no floating point anywhere in this module.
Rational coordinates are plain ``fractions.Fraction`` values, which already
guarantee a positive denominator and canonical (fully reduced) form, so
point equality is structural equality.
"""

from __future__ import annotations

from dataclasses import dataclass
from fractions import Fraction
from math import gcd
from typing import Optional, Sequence, Union

from .errors import DegenerateSegmentError, DuplicatePointsError

Rational = Fraction
Coord = Union[int, Fraction]


@dataclass(frozen=True)
class Point:
    """A point in the plane with exact rational coordinates."""

    x: Fraction
    y: Fraction

    def __init__(self, x: Coord, y: Coord):
        object.__setattr__(self, "x", Fraction(x))
        object.__setattr__(self, "y", Fraction(y))

    def __repr__(self) -> str:
        return f"Point({self.x}, {self.y})"


def _cross_sign(a: Point, b: Point, c: Point) -> int:
    # Sign of (b-a) x (c-a), computed on raw numerators/denominators to
    # avoid the gcd normalization cost of Fraction arithmetic in hot loops.
    axn, axd = a.x.numerator, a.x.denominator
    ayn, ayd = a.y.numerator, a.y.denominator
    # u = b - a, v = c - a, each component as (num, positive den)
    uxn = b.x.numerator * axd - axn * b.x.denominator
    uxd = b.x.denominator * axd
    uyn = b.y.numerator * ayd - ayn * b.y.denominator
    uyd = b.y.denominator * ayd
    vxn = c.x.numerator * axd - axn * c.x.denominator
    vxd = c.x.denominator * axd
    vyn = c.y.numerator * ayd - ayn * c.y.denominator
    vyd = c.y.denominator * ayd
    # cross = ux*vy - uy*vx; all denominators are positive.
    lhs = uxn * vyn * uyd * vxd
    rhs = uyn * vxn * uxd * vyd
    if lhs > rhs:
        return 1
    if lhs < rhs:
        return -1
    return 0


def orientation(a: Point, b: Point, c: Point) -> int:
    """Sign of the cross product (b-a) x (c-a).

    Returns +1 for a counterclockwise turn, -1 for clockwise, 0 iff the
    three points are collinear. Exact.
    """
    return _cross_sign(a, b, c)


def point_on_open_segment(q: Point, a: Point, b: Point) -> bool:
    """True iff q lies strictly between a and b on the segment ab."""
    if a == b:
        raise DegenerateSegmentError("segment endpoints coincide")
    if _cross_sign(a, b, q) != 0:
        return False
    if a.x != b.x:
        lo, hi = (a.x, b.x) if a.x < b.x else (b.x, a.x)
        return lo < q.x < hi
    lo, hi = (a.y, b.y) if a.y < b.y else (b.y, a.y)
    return lo < q.y < hi


def segment_line_params(a: Point, b: Point, c: Point, d: Point) -> Optional[Fraction]:
    """Parameter t with a + t*(b-a) on line(c, d), or None if parallel.

    The parameter is with respect to the (a, b) parametrization; None is
    returned both for parallel and for identical lines.
    """
    if a == b or c == d:
        raise DegenerateSegmentError("degenerate segment or line")
    # Solve cross(d-c, a + t*(b-a) - c) = 0.
    ex, ey = d.x - c.x, d.y - c.y
    denom = ex * (b.y - a.y) - ey * (b.x - a.x)
    if denom == 0:
        return None
    numer = ex * (c.y - a.y) - ey * (c.x - a.x)
    return numer / denom


def primitive_direction(a: Point, b: Point) -> tuple[int, int]:
    """Primitive integer direction of the ray from a to b (sign preserved)."""
    if a == b:
        raise DegenerateSegmentError("no direction between identical points")
    dx, dy = b.x - a.x, b.y - a.y
    # Clear denominators, then reduce.
    nx = dx.numerator * dy.denominator
    ny = dy.numerator * dx.denominator
    g = gcd(abs(nx), abs(ny))
    return nx // g, ny // g


def line_direction(a: Point, b: Point) -> tuple[int, int]:
    """Canonical direction of line(a, b): primitive, sign-normalized.

    The sign is fixed so that the first nonzero component is positive,
    making the key identical for both orientations of the line.
    """
    nx, ny = primitive_direction(a, b)
    if nx < 0 or (nx == 0 and ny < 0):
        nx, ny = -nx, -ny
    return nx, ny


def _check_distinct(points: Sequence[Point]) -> None:
    if len(set(points)) != len(points):
        raise DuplicatePointsError("points must be pairwise distinct")


def _strict_hull(order: list[int], points: Sequence[Point]) -> list[int]:
    # Monotone chain over pre-sorted indices; strictly convex (collinear
    # boundary points dropped here and re-inserted by convex_hull).
    if len(order) <= 2:
        return list(order)

    def chain(seq):
        out: list[int] = []
        for i in seq:
            while len(out) >= 2 and _cross_sign(points[out[-2]], points[out[-1]], points[i]) <= 0:
                out.pop()
            out.append(i)
        return out

    lower = chain(order)
    upper = chain(reversed(order))
    return lower[:-1] + upper[:-1]


def convex_hull(points: Sequence[Point]) -> list[int]:
    """Indices of the convex hull in counterclockwise order.

    Points lying on a hull edge are included in the output (between the
    edge's endpoints); a fully collinear input yields all indices sorted
    along the line.
    """
    _check_distinct(points)
    n = len(points)
    if n == 0:
        raise ValueError("need at least one point")
    order = sorted(range(n), key=lambda i: (points[i].x, points[i].y))
    if n <= 2:
        return order
    hull = _strict_hull(order, points)
    if len(hull) < 3:
        # All points collinear: a degenerate one-dimensional hull.
        return order
    on_hull = set(hull)
    result: list[int] = []
    for pos, i in enumerate(hull):
        j = hull[(pos + 1) % len(hull)]
        result.append(i)
        a, b = points[i], points[j]
        between = [k for k in range(n)
                   if k not in on_hull and point_on_open_segment(points[k], a, b)]
        # Order along the edge; |dx|+|dy| grows monotonically from a.
        between.sort(key=lambda k: abs(points[k].x - a.x) + abs(points[k].y - a.y))
        result.extend(between)
    return result


def convex_layers(points: Sequence[Point]) -> list[list[int]]:
    """Partition indices into successive convex hulls, outermost first."""
    _check_distinct(points)
    remaining = list(range(len(points)))
    layers: list[list[int]] = []
    while remaining:
        sub = [points[i] for i in remaining]
        hull_local = convex_hull(sub)
        layer = [remaining[i] for i in hull_local]
        layers.append(layer)
        taken = set(layer)
        remaining = [i for i in remaining if i not in taken]
    return layers
