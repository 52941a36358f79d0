"""Planar kernel over dual-backend scalars.

Points, rigid motions, polygons, signed areas and intersection predicates.
Everything is generic in the scalar backend: exact predicates run with zero
tolerance, float predicates are guarded by a relative tolerance against a
caller-declared scale.
"""

from __future__ import annotations

import math
from dataclasses import dataclass
from fractions import Fraction
from typing import Iterable, Sequence

from .numeric import (
    COINCIDENCE_RTOL,
    ExactValueUnavailable,
    Scalar,
    exact_sincos,
    is_exact,
    scalar_eq,
    scalar_sign,
    scalar_sqrt,
)


class Point:
    """A point (or free vector) with scalar coordinates of one backend."""

    __slots__ = ("x", "y")

    def __init__(self, x: Scalar, y: Scalar):
        self.x = x
        self.y = y

    def __add__(self, other: "Point") -> "Point":
        return Point(self.x + other.x, self.y + other.y)

    def __sub__(self, other: "Point") -> "Point":
        return Point(self.x - other.x, self.y - other.y)

    def __neg__(self) -> "Point":
        return Point(-self.x, -self.y)

    def scale(self, k: Scalar) -> "Point":
        return Point(self.x * k, self.y * k)

    def dot(self, other: "Point") -> Scalar:
        return self.x * other.x + self.y * other.y

    def cross(self, other: "Point") -> Scalar:
        return self.x * other.y - self.y * other.x

    def perp(self) -> "Point":
        """Counterclockwise quarter turn."""
        return Point(-self.y, self.x)

    def rotate_sincos(self, s: Scalar, c: Scalar) -> "Point":
        return Point(self.x * c - self.y * s, self.x * s + self.y * c)

    def norm_sq(self) -> Scalar:
        return self.x * self.x + self.y * self.y

    def norm(self) -> Scalar:
        return scalar_sqrt(self.norm_sq())

    def as_floats(self) -> tuple[float, float]:
        return float(self.x), float(self.y)

    def __eq__(self, other) -> bool:
        if not isinstance(other, Point):
            return NotImplemented
        return bool(self.x == other.x) and bool(self.y == other.y)

    def __hash__(self):
        return hash((self.x, self.y))

    def __iter__(self):
        yield self.x
        yield self.y

    def __repr__(self) -> str:
        return f"Point({self.x!r}, {self.y!r})"


Segment = tuple[Point, Point]


def points_coincide(p: Point, q: Point, scale: Scalar = 1, tol: float = COINCIDENCE_RTOL) -> bool:
    return scalar_eq(p.x, q.x, scale, tol) and scalar_eq(p.y, q.y, scale, tol)


def distance(p: Point, q: Point) -> float:
    d = q - p
    return math.hypot(float(d.x), float(d.y))


def midpoint(p: Point, q: Point) -> Point:
    if is_exact(p.x):
        half = Fraction(1, 2)
    else:
        half = 0.5
    return (p + q).scale(half)


@dataclass(frozen=True)
class Polygon:
    """Vertex cycle; orientation is whatever the order gives (CCW positive)."""

    vertices: tuple[Point, ...]

    def __init__(self, vertices: Iterable[Point]):
        vs = tuple(vertices)
        if len(vs) < 3:
            raise ValueError("polygon needs at least 3 vertices")
        object.__setattr__(self, "vertices", vs)

    def __len__(self) -> int:
        return len(self.vertices)

    def edges(self) -> list[Segment]:
        vs = self.vertices
        return [(vs[i], vs[(i + 1) % len(vs)]) for i in range(len(vs))]

    def coordinate_scale(self) -> float:
        return max(max(abs(float(v.x)), abs(float(v.y))) for v in self.vertices) or 1.0


def signed_area(poly: Polygon | Sequence[Point]) -> Scalar:
    """Half the shoelace sum; positive iff the cycle runs counterclockwise."""
    vs = poly.vertices if isinstance(poly, Polygon) else tuple(poly)
    if len(vs) < 3:
        raise ValueError("polygon needs at least 3 vertices")
    total = vs[-1].cross(vs[0])
    for i in range(len(vs) - 1):
        total = total + vs[i].cross(vs[i + 1])
    if is_exact(total):
        return total * Fraction(1, 2)
    return total * 0.5


def area(poly: Polygon | Sequence[Point]) -> Scalar:
    a = signed_area(poly)
    return -a if scalar_sign(a, tol=0.0) < 0 else a


def rotate_about(p: Point, center: Point, degrees) -> Point:
    """Rotate ``p`` counterclockwise about ``center``.

    Exact-backend points require ``degrees`` to have an exact sin/cos pair.
    """
    if is_exact(p.x):
        s, c = exact_sincos(degrees)
    else:
        rad = math.radians(float(degrees))
        s, c = math.sin(rad), math.cos(rad)
    return center + (p - center).rotate_sincos(s, c)


@dataclass(frozen=True)
class Transform:
    """Uniform scaling and rotation about a center, then a translation."""

    center: Point
    degrees: Scalar = 0
    scale: Scalar = 1
    translation: Point | None = None

    def __post_init__(self):
        if scalar_sign(self.scale, tol=0.0) == 0:
            raise ValueError("transform scale must be nonzero")

    def apply(self, p: Point) -> Point:
        if is_exact(p.x):
            s, c = exact_sincos(self.degrees)
        else:
            rad = math.radians(float(self.degrees))
            s, c = math.sin(rad), math.cos(rad)
        q = self.center + (p - self.center).rotate_sincos(s, c).scale(self.scale)
        if self.translation is not None:
            q = q + self.translation
        return q


# ---------------------------------------------------------------------------
# Predicates
# ---------------------------------------------------------------------------

def orientation(a: Point, b: Point, c: Point, scale: Scalar = 1,
                tol: float = COINCIDENCE_RTOL) -> int:
    """Sign of the turn a->b->c: 1 left, -1 right, 0 collinear (within band)."""
    cross = (b - a).cross(c - a)
    if is_exact(cross):
        return scalar_sign(cross)
    sc = max(abs(float(scale)), 1.0)
    return scalar_sign(cross, scale=sc * sc, tol=tol)


def _on_segment_collinear(p: Point, a: Point, b: Point) -> bool:
    """Assuming collinearity, is p within the closed box of segment ab?"""
    def within(lo, hi, v):
        if scalar_sign(hi - lo, tol=0.0) < 0:
            lo, hi = hi, lo
        return scalar_sign(v - lo, tol=0.0) >= 0 and scalar_sign(hi - v, tol=0.0) >= 0
    return within(a.x, b.x, p.x) and within(a.y, b.y, p.y)


def segments_properly_intersect(s1: Segment, s2: Segment, scale: Scalar = 1,
                                tol: float = COINCIDENCE_RTOL) -> bool:
    """True iff the open interiors cross; endpoint touches do not count."""
    a, b = s1
    c, d = s2
    d1 = orientation(a, b, c, scale, tol)
    d2 = orientation(a, b, d, scale, tol)
    d3 = orientation(c, d, a, scale, tol)
    d4 = orientation(c, d, b, scale, tol)
    return d1 * d2 < 0 and d3 * d4 < 0


def segment_point_touch(p: Point, seg: Segment, scale: Scalar = 1,
                        tol: float = COINCIDENCE_RTOL) -> bool:
    """True iff ``p`` lies on the closed segment (within the tolerance band)."""
    a, b = seg
    if orientation(a, b, p, scale, tol) != 0:
        return False
    return _on_segment_collinear(p, a, b)


def polygon_self_intersects(poly: Polygon, tol: float = COINCIDENCE_RTOL) -> bool:
    """True iff some pair of non-adjacent edges properly intersects."""
    edges = poly.edges()
    scale = poly.coordinate_scale()
    n = len(edges)
    for i in range(n):
        for j in range(i + 1, n):
            if j == i + 1 or (i == 0 and j == n - 1):
                continue  # adjacent edges share an endpoint
            if segments_properly_intersect(edges[i], edges[j], scale, tol):
                return True
    return False


def point_in_polygon(p: Point, poly: Polygon, scale: Scalar = 1,
                     tol: float = COINCIDENCE_RTOL) -> bool:
    """Strict interior test (boundary points, within tolerance, are outside)."""
    for e in poly.edges():
        if segment_point_touch(p, e, scale, tol):
            return False
    # crossing number against a horizontal ray through p, on floats
    px, py = p.as_floats()
    inside = False
    vs = [v.as_floats() for v in poly.vertices]
    n = len(vs)
    for i in range(n):
        x1, y1 = vs[i]
        x2, y2 = vs[(i + 1) % n]
        if (y1 > py) != (y2 > py):
            xcross = x1 + (py - y1) * (x2 - x1) / (y2 - y1)
            if px < xcross:
                inside = not inside
    return inside


def polygons_overlap(p1: Polygon, p2: Polygon, tol: float = COINCIDENCE_RTOL) -> bool:
    """True iff interiors overlap: a proper boundary crossing, or a vertex of
    one polygon strictly inside the other.  Touching along edges or at
    vertices (within tolerance) is not overlap."""
    if polygon_self_intersects(p1, tol) or polygon_self_intersects(p2, tol):
        raise ValueError("polygons_overlap requires simple polygons")
    scale = max(p1.coordinate_scale(), p2.coordinate_scale())
    for e1 in p1.edges():
        for e2 in p2.edges():
            if segments_properly_intersect(e1, e2, scale, tol):
                return True
    for v in p1.vertices:
        if point_in_polygon(v, p2, scale, tol):
            return True
    for v in p2.vertices:
        if point_in_polygon(v, p1, scale, tol):
            return True
    return False
