"""Exact planar predicates over ints and Fractions.

Nothing in here touches floating point; every helper is safe to use as a
trust anchor for verification.
"""
from __future__ import annotations

from fractions import Fraction
from typing import Optional, Sequence, Tuple, Union

Number = Union[int, Fraction]
Point = Tuple[Number, Number]


def sign(x: Number) -> int:
    return (x > 0) - (x < 0)


def orient(a: Point, b: Point, c: Point) -> int:
    """Sign of the signed area of (a, b, c); +1 for a counterclockwise turn."""
    return sign((b[0] - a[0]) * (c[1] - a[1]) - (b[1] - a[1]) * (c[0] - a[0]))


def pseudo_angle(dx: Number, dy: Number) -> Fraction:
    """Monotone exact surrogate of the polar angle, with values in [0, 4).

    0 is the +x direction and the value grows counterclockwise; each open
    quadrant covers one unit interval (NE = (0, 1), NW = (1, 2), ...).
    """
    if dx == 0 and dy == 0:
        raise ValueError("zero vector has no direction")
    if dx > 0 and dy >= 0:
        return Fraction(dy) / (dx + dy)
    if dx <= 0 and dy > 0:
        return 1 + Fraction(-dx) / (dy - dx)
    if dx < 0 and dy <= 0:
        return 2 + Fraction(-dy) / (-dx - dy)
    return 3 + Fraction(dx) / (dx - dy)


def direction_at(p: Fraction) -> Tuple[Fraction, Fraction]:
    """Inverse of :func:`pseudo_angle` up to positive scaling."""
    p = Fraction(p) % 4
    k = int(p)
    t = p - k
    if k == 0:
        return (1 - t, t)
    if k == 1:
        return (-t, 1 - t)
    if k == 2:
        return (t - 1, -t)
    return (t, t - 1)


def on_segment(p: Point, a: Point, b: Point) -> bool:
    """True if p lies on the closed segment ab (p collinear assumed checked here too)."""
    if orient(a, b, p) != 0:
        return False
    return min(a[0], b[0]) <= p[0] <= max(a[0], b[0]) and min(a[1], b[1]) <= p[1] <= max(a[1], b[1])


def segment_intersection(a: Point, b: Point, c: Point, d: Point):
    """Intersection of closed segments ab and cd.

    Returns ``None``, ``("point", P)`` or ``("overlap", (P, Q))`` for a
    collinear overlap of positive length.
    """
    o1, o2 = orient(a, b, c), orient(a, b, d)
    o3, o4 = orient(c, d, a), orient(c, d, b)
    if o1 == o2 == o3 == o4 == 0:
        # collinear: project on the dominant axis
        axis = 0 if a[0] != b[0] else 1
        s0, s1 = sorted((a, b), key=lambda p: p[axis])
        t0, t1 = sorted((c, d), key=lambda p: p[axis])
        lo = s0 if s0[axis] >= t0[axis] else t0
        hi = s1 if s1[axis] <= t1[axis] else t1
        if lo[axis] > hi[axis]:
            return None
        if lo[axis] == hi[axis]:
            return ("point", lo)
        return ("overlap", (lo, hi))
    if o1 * o2 > 0 or o3 * o4 > 0:
        return None
    # proper or touching crossing; solve exactly
    den = (b[0] - a[0]) * (d[1] - c[1]) - (b[1] - a[1]) * (d[0] - c[0])
    t = Fraction((c[0] - a[0]) * (d[1] - c[1]) - (c[1] - a[1]) * (d[0] - c[0])) / den
    x = a[0] + t * (b[0] - a[0])
    y = a[1] + t * (b[1] - a[1])
    return ("point", (_normalize(x), _normalize(y)))


def _normalize(x: Number) -> Number:
    if isinstance(x, Fraction) and x.denominator == 1:
        return int(x)
    return x


def point_in_open_triangle(p: Point, a: Point, b: Point, c: Point) -> bool:
    s = orient(a, b, c)
    return s != 0 and orient(a, b, p) == s and orient(b, c, p) == s and orient(c, a, p) == s


def clip_halfplane(poly: Sequence[Point], keep) -> list:
    """Sutherland-Hodgman step for a half-plane given by an affine function.

    ``keep(p)`` returns a number; points with value > 0 are kept.  The
    boundary is the zero set, which must be affine in p.
    """
    out = []
    n = len(poly)
    for i in range(n):
        p, q = poly[i], poly[(i + 1) % n]
        fp, fq = keep(p), keep(q)
        if fp > 0:
            out.append(p)
        if (fp > 0) != (fq > 0):
            t = Fraction(fp) / (fp - fq)
            out.append((p[0] + t * (q[0] - p[0]), p[1] + t * (q[1] - p[1])))
    return out


def polygon_area2(poly: Sequence[Point]) -> Number:
    """Twice the signed area."""
    s = 0
    for i in range(len(poly)):
        x0, y0 = poly[i]
        x1, y1 = poly[(i + 1) % len(poly)]
        s += x0 * y1 - x1 * y0
    return s


def interior_point(poly: Sequence[Point]) -> Optional[Point]:
    """A point strictly inside a convex polygon, or None if it is degenerate."""
    if len(poly) < 3 or polygon_area2(poly) == 0:
        return None
    n = len(poly)
    return (sum(Fraction(p[0]) for p in poly) / n, sum(Fraction(p[1]) for p in poly) / n)
