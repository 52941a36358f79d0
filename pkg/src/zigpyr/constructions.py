"""Builders for ziggurats, pyramids, regular polygons and the full named
configurations over a triangle, in a canonical pose.

A ziggurat of basis ``l`` and base angle ``theta`` is the isosceles trapezium
with basis and both legs of length ``l`` (square at 90 degrees, equilateral
triangle at 60, half-hexagon at 120).  A pyramid is the isosceles triangle
with basis ``l`` and base angles ``theta``; its legs measure ``l/(2 cos
theta)``.

The canonical configuration pose puts the right angle at the origin:
``C = (0, 0)``, ``A = (b, 0)``, ``B = (0, a)``.  External pieces are erected
on the half-plane away from the triangle, the piece over the hypotenuse on
the half-plane containing ``C``.  Construction is total in ``theta`` --
degenerate parameter ranges still build, with the degeneracy recorded --
and is radical-free, so it runs unchanged on the exact backend whenever
``sin theta`` and ``cos theta`` live in a single quadratic field.
"""

from __future__ import annotations

import math
from dataclasses import dataclass
from fractions import Fraction
from typing import Optional

from .geometry import (
    Point,
    Polygon,
    midpoint,
    points_coincide,
    polygon_self_intersects,
    polygons_overlap,
    signed_area,
)
from .numeric import (
    AREA_RTOL,
    ExactValueUnavailable,
    QuadExt,
    Scalar,
    exact_sincos,
    is_exact,
    scalar_sign,
    scalar_sqrt,
)

ZIGGURAT = "ziggurat"
PYRAMID = "pyramid"
DOUBLE_ANGLE = "double_angle"

PYRAMID_UNBOUNDED_THRESHOLD = 89.5  # degrees; legs exceed ~57x the basis

# polygon name -> vertex-name cycle, per family
ZIGGURAT_POLYGONS: dict[str, tuple[str, ...]] = {
    "ziggurat_a": ("E'", "C", "B", "E''"),
    "ziggurat_b": ("D'", "C", "A", "D''"),
    "ziggurat_c": ("F", "A", "B", "G"),
    "triangle": ("A", "B", "C"),
    "central_parallelogram": ("E'", "C'", "D'", "C"),
    "side_parallelogram_a": ("C'", "E'", "E''", "G"),
    "side_parallelogram_b": ("C'", "D'", "D''", "F"),
    "central_triangle": ("F", "G", "C'"),
    "corner_triangle_a": ("A", "F", "D''"),
    "corner_triangle_b": ("G", "B", "E''"),
    "master": ("A", "B", "E''", "G", "C'", "F", "D''"),
}

PYRAMID_POLYGONS: dict[str, tuple[str, ...]] = {
    "pyramid_a": ("C", "B", "A'"),
    "pyramid_b": ("C", "A", "B'"),
    "pyramid_c": ("A", "B", "C'"),
    "triangle": ("A", "B", "C"),
    "central_parallelogram": ("C", "A'", "C'", "B'"),
    "corner_triangle_a": ("A", "C'", "B'"),
    "corner_triangle_b": ("B", "A'", "C'"),
    "master": ("A", "B", "A'", "C'", "B'"),
}

DOUBLE_ANGLE_POLYGONS: dict[str, tuple[str, ...]] = {
    "triangle": ("A", "B", "C"),
    "similar_triangle": ("O", "B'", "C'"),
}


class ConstructionError(ValueError):
    pass


def _sincos(theta_degrees, exact: bool) -> tuple[Scalar, Scalar]:
    if exact:
        return exact_sincos(Fraction(theta_degrees))
    rad = math.radians(float(theta_degrees))
    return math.sin(rad), math.cos(rad)


def _coerce(value, exact: bool) -> Scalar:
    if exact:
        if isinstance(value, QuadExt):
            return value
        if isinstance(value, float):
            if not value.is_integer():
                raise ConstructionError(
                    f"exact construction needs rational inputs, got float {value}"
                )
            value = int(value)
        return QuadExt(Fraction(value))
    return float(value)


@dataclass(frozen=True)
class RightTriangle:
    """Legs ``a`` (along CB) and ``b`` (along CA) of a right triangle at C."""

    a: float | Fraction | int | QuadExt
    b: float | Fraction | int | QuadExt

    def __post_init__(self):
        if float(self.a) <= 0 or float(self.b) <= 0:
            raise ConstructionError("triangle legs must be positive")

    def hypotenuse(self) -> float:
        return math.hypot(float(self.a), float(self.b))

    def points(self, exact: bool = False) -> tuple[Point, Point, Point]:
        """(A, B, C) in the canonical pose."""
        a = _coerce(self.a, exact)
        b = _coerce(self.b, exact)
        zero = QuadExt(0) if exact else 0.0
        return Point(b, zero), Point(zero, a), Point(zero, zero)


@dataclass(frozen=True)
class Ziggurat:
    basis: tuple[Point, Point]
    theta_degrees: float
    side: str  # "left" | "right" of the directed basis
    vertices: tuple[Point, Point, Point, Point]  # P, Q, Q_top, P_top

    def polygon(self) -> Polygon:
        return Polygon(self.vertices)

    def basis_length_sq(self) -> Scalar:
        p, q = self.basis
        return (q - p).norm_sq()

    def area(self) -> Scalar:
        """Unsigned area l^2 sin(theta) (1 - cos(theta)), from the kernel."""
        a = signed_area(self.polygon())
        return -a if scalar_sign(a, tol=0.0) < 0 else a


@dataclass(frozen=True)
class Pyramid:
    basis: tuple[Point, Point]
    theta_degrees: float
    side: str
    vertices: tuple[Point, Point, Point]  # P, Q, apex

    def polygon(self) -> Polygon:
        return Polygon(self.vertices)

    def apex(self) -> Point:
        return self.vertices[2]

    def leg_ratio(self) -> float:
        """r = 1 / (2 cos theta): leg length over basis length."""
        return 1.0 / (2.0 * math.cos(math.radians(self.theta_degrees)))

    def area(self) -> Scalar:
        a = signed_area(self.polygon())
        return -a if scalar_sign(a, tol=0.0) < 0 else a


@dataclass(frozen=True)
class DegeneracyRecord:
    """Parameter regimes where some construction piece collapses or overlaps."""

    ziggurat_self_intersection: bool = False      # theta < 60
    central_triangle_vanishes: bool = False       # theta = 60
    side_parallelograms_degenerate: bool = False  # theta = 90
    central_parallelogram_degenerate: bool = False  # theta = 135 (ziggurat) / 45 (pyramid)
    leg_ziggurats_overlap: bool = False           # theta > 135
    pyramid_near_unbounded: bool = False          # theta -> 90 (pyramid)

    def as_dict(self) -> dict[str, bool]:
        return {
            "ziggurat_self_intersection": self.ziggurat_self_intersection,
            "central_triangle_vanishes": self.central_triangle_vanishes,
            "side_parallelograms_degenerate": self.side_parallelograms_degenerate,
            "central_parallelogram_degenerate": self.central_parallelogram_degenerate,
            "leg_ziggurats_overlap": self.leg_ziggurats_overlap,
            "pyramid_near_unbounded": self.pyramid_near_unbounded,
        }

    def any_flag(self) -> bool:
        return any(self.as_dict().values())


class ConfigurationDocument:
    """All named points and polygons of one (a, b, theta, family) instance.

    Polygons are stored as cycles of point names, so the closure property
    (every polygon vertex is a named point) holds by construction.  The
    degeneracy record is computed from geometric predicates on first access
    and cached; documents are otherwise immutable.
    """

    __slots__ = ("family", "a", "b", "theta_degrees", "exact",
                 "named_points", "polygons", "_degeneracy")

    def __init__(self, family: str, a: float, b: float, theta_degrees: float,
                 exact: bool, named_points: dict[str, Point],
                 polygons: dict[str, tuple[str, ...]]):
        self.family = family
        self.a = a
        self.b = b
        self.theta_degrees = theta_degrees
        self.exact = exact
        self.named_points = named_points
        self.polygons = polygons
        self._degeneracy: Optional[DegeneracyRecord] = None

    @property
    def degeneracy(self) -> DegeneracyRecord:
        if self._degeneracy is None:
            self._degeneracy = classify_degeneracy(self)
        return self._degeneracy

    def point(self, name: str) -> Point:
        return self.named_points[name]

    def polygon(self, name: str) -> Polygon:
        return Polygon(self.named_points[v] for v in self.polygons[name])

    def polygon_area(self, name: str) -> Scalar:
        value = signed_area(self.polygon(name))
        return -value if scalar_sign(value, tol=0.0) < 0 else value

    def areas(self) -> dict[str, float]:
        return {name: float(self.polygon_area(name)) for name in self.polygons}

    def coordinate_scale(self) -> float:
        return max(
            max(abs(float(p.x)), abs(float(p.y))) for p in self.named_points.values()
        ) or 1.0


# ---------------------------------------------------------------------------
# Elementary builders
# ---------------------------------------------------------------------------

def _check_basis(p: Point, q: Point):
    if points_coincide(p, q):
        raise ConstructionError("zero-length basis")


def _side_sign(side: str) -> int:
    if side == "left":
        return 1
    if side == "right":
        return -1
    raise ConstructionError(f"side must be 'left' or 'right', got {side!r}")


def build_ziggurat(p: Point, q: Point, theta_degrees, side: str = "left",
                   exact: Optional[bool] = None) -> Ziggurat:
    """Erect the (l, theta)-ziggurat on the directed basis p -> q.

    The body occupies the given half-plane; legs are the basis rotated by
    +/- theta at each endpoint, so no square roots are involved.
    """
    _check_basis(p, q)
    if not 0 < float(theta_degrees) < 180:
        raise ConstructionError("ziggurat angle must lie strictly between 0 and 180 degrees")
    if exact is None:
        exact = is_exact(p.x)
    s, c = _sincos(theta_degrees, exact)
    sgn = _side_sign(side)
    if sgn < 0:
        s = -s
    p_top = p + (q - p).rotate_sincos(s, c)
    q_top = q + (p - q).rotate_sincos(-s, c)
    return Ziggurat(
        basis=(p, q),
        theta_degrees=float(theta_degrees),
        side=side,
        vertices=(p, q, q_top, p_top),
    )


def build_pyramid(p: Point, q: Point, theta_degrees, side: str = "left",
                  exact: Optional[bool] = None) -> Pyramid:
    """Erect the (l, theta)-pyramid on the directed basis p -> q."""
    _check_basis(p, q)
    if not 0 < float(theta_degrees) < 90:
        raise ConstructionError("pyramid angle must lie strictly between 0 and 90 degrees")
    if exact is None:
        exact = is_exact(p.x)
    s, c = _sincos(theta_degrees, exact)
    sgn = _side_sign(side)
    half = Fraction(1, 2) if exact else 0.5
    apex = midpoint(p, q) + (q - p).perp().scale((s / c) * half * sgn)
    return Pyramid(
        basis=(p, q),
        theta_degrees=float(theta_degrees),
        side=side,
        vertices=(p, q, apex),
    )


def build_regular_polygon(n: int, p: Point, q: Point, orientation: str = "left",
                          exact: Optional[bool] = None) -> Polygon:
    """Regular n-gon erected on the directed side p -> q."""
    if n < 3:
        raise ConstructionError("regular polygon needs n >= 3")
    _check_basis(p, q)
    if exact is None:
        exact = is_exact(p.x)
    s, c = _sincos(Fraction(360, n), exact)
    if _side_sign(orientation) < 0:
        s = -s
    vertices = [p, q]
    edge = q - p
    for _ in range(n - 2):
        edge = edge.rotate_sincos(s, c)
        vertices.append(vertices[-1] + edge)
    return Polygon(vertices)


def regular_polygon_area_formula(n: int, side_length: float) -> float:
    return n * side_length**2 / (4.0 * math.tan(math.pi / n))


# ---------------------------------------------------------------------------
# Full configurations
# ---------------------------------------------------------------------------

def _external_side(p: Point, q: Point, other: Point) -> str:
    """Half-plane of the basis p->q NOT containing ``other``."""
    turn = scalar_sign((q - p).cross(other - p), tol=0.0)
    if turn == 0:
        raise ConstructionError("degenerate triangle: vertices are collinear")
    return "right" if turn > 0 else "left"


def _internal_side(p: Point, q: Point, other: Point) -> str:
    return "left" if _external_side(p, q, other) == "right" else "right"


def build_triangle_ziggurat_configuration(a_pt: Point, b_pt: Point, c_pt: Point,
                                          theta_degrees,
                                          exact: bool = False) -> ConfigurationDocument:
    """Ziggurat configuration over an arbitrary triangle ABC.

    External ziggurats over CA and CB, an internal one over AB, and the
    auxiliary vertex ``C'`` closing the central parallelogram E'C'D'C.  The
    right angle at C is *not* required here; the parallelogram structure
    holds for every triangle.
    """
    zig_b = build_ziggurat(c_pt, a_pt, theta_degrees,
                           _external_side(c_pt, a_pt, b_pt), exact)
    zig_a = build_ziggurat(c_pt, b_pt, theta_degrees,
                           _external_side(c_pt, b_pt, a_pt), exact)
    zig_c = build_ziggurat(a_pt, b_pt, theta_degrees,
                           _internal_side(a_pt, b_pt, c_pt), exact)
    d_p, d_pp = zig_b.vertices[3], zig_b.vertices[2]
    e_p, e_pp = zig_a.vertices[3], zig_a.vertices[2]
    f, g = zig_c.vertices[3], zig_c.vertices[2]
    c_prime = e_p + d_p - c_pt
    named = {
        "A": a_pt, "B": b_pt, "C": c_pt,
        "C'": c_prime,
        "D'": d_p, "D''": d_pp,
        "E'": e_p, "E''": e_pp,
        "F": f, "G": g,
    }
    doc = ConfigurationDocument(
        family=ZIGGURAT,
        a=float((b_pt - c_pt).norm_sq()) ** 0.5,
        b=float((a_pt - c_pt).norm_sq()) ** 0.5,
        theta_degrees=float(theta_degrees),
        exact=exact,
        named_points=named,
        polygons=dict(ZIGGURAT_POLYGONS),
    )
    return doc


def build_ziggurat_configuration(tri: RightTriangle, theta_degrees,
                                 exact: bool = False) -> ConfigurationDocument:
    """Ziggurat configuration over a right triangle in the canonical pose."""
    a_pt, b_pt, c_pt = tri.points(exact)
    return build_triangle_ziggurat_configuration(a_pt, b_pt, c_pt, theta_degrees, exact)


def build_triangle_pyramid_configuration(a_pt: Point, b_pt: Point, c_pt: Point,
                                         theta_degrees,
                                         exact: bool = False) -> ConfigurationDocument:
    """Pyramid configuration over an arbitrary triangle ABC.

    Apexes: A' over CB, B' over CA (both external), C' over AB (internal).
    CA'C'B' is a parallelogram for every triangle; the right angle at C is
    needed only by the area identities.
    """
    pyr_a = build_pyramid(c_pt, b_pt, theta_degrees,
                          _external_side(c_pt, b_pt, a_pt), exact)
    pyr_b = build_pyramid(c_pt, a_pt, theta_degrees,
                          _external_side(c_pt, a_pt, b_pt), exact)
    pyr_c = build_pyramid(a_pt, b_pt, theta_degrees,
                          _internal_side(a_pt, b_pt, c_pt), exact)
    named = {
        "A": a_pt, "B": b_pt, "C": c_pt,
        "A'": pyr_a.apex(), "B'": pyr_b.apex(), "C'": pyr_c.apex(),
    }
    doc = ConfigurationDocument(
        family=PYRAMID,
        a=float((b_pt - c_pt).norm_sq()) ** 0.5,
        b=float((a_pt - c_pt).norm_sq()) ** 0.5,
        theta_degrees=float(theta_degrees),
        exact=exact,
        named_points=named,
        polygons=dict(PYRAMID_POLYGONS),
    )
    return doc


def build_pyramid_configuration(tri: RightTriangle, theta_degrees,
                                exact: bool = False) -> ConfigurationDocument:
    a_pt, b_pt, c_pt = tri.points(exact)
    return build_triangle_pyramid_configuration(a_pt, b_pt, c_pt, theta_degrees, exact)


def build_configuration(tri: RightTriangle, theta_degrees, family: str,
                        exact: bool = False) -> ConfigurationDocument:
    if family == ZIGGURAT:
        return build_ziggurat_configuration(tri, theta_degrees, exact)
    if family == PYRAMID:
        return build_pyramid_configuration(tri, theta_degrees, exact)
    raise ConstructionError(f"unknown family {family!r}")


def build_double_angle_figure(theta_degrees, exact: bool = False) -> ConfigurationDocument:
    """Similar-triangle figure behind cos(2t) = 2 cos^2(t) - 1.

    On the unit circle centered at O: A = (-1, 0), C = C' on the circle at
    angle 2*theta, B the foot of the altitude from C, and B' the midpoint of
    the chord AC.  Then |AB| = 1 + cos(2t), |CB| = sin(2t), and triangle
    OB'C' is similar to ABC with legs sin(t), cos(t).
    """
    if not 0 < float(theta_degrees) <= 45:
        raise ConstructionError("double-angle figure needs 0 < theta <= 45 degrees")
    s2, c2 = _sincos(2 * Fraction(theta_degrees) if exact else 2 * float(theta_degrees), exact)
    one = QuadExt(1) if exact else 1.0
    zero = QuadExt(0) if exact else 0.0
    o = Point(zero, zero)
    a_pt = Point(-one, zero)
    b_pt = Point(c2, zero)
    c_pt = Point(c2, s2)
    named = {
        "O": o, "A": a_pt, "B": b_pt, "C": c_pt,
        "B'": midpoint(a_pt, c_pt), "C'": c_pt,
    }
    return ConfigurationDocument(
        family=DOUBLE_ANGLE,
        a=float(s2),
        b=float(one + c2),
        theta_degrees=float(theta_degrees),
        exact=exact,
        named_points=named,
        polygons=dict(DOUBLE_ANGLE_POLYGONS),
    )


# ---------------------------------------------------------------------------
# Degeneracy classification
# ---------------------------------------------------------------------------

def _area_vanishes(doc: ConfigurationDocument, name: str, reference: float) -> bool:
    value = doc.polygon_area(name)
    if doc.exact:
        return scalar_sign(value, tol=0.0) == 0
    return abs(float(value)) <= AREA_RTOL * max(reference, 1.0)


def classify_degeneracy(doc: ConfigurationDocument) -> DegeneracyRecord:
    """Flags from geometric predicates on the document's own polygons."""
    if doc.family == DOUBLE_ANGLE:
        return DegeneracyRecord()
    ab = doc.a * doc.b
    if doc.family == PYRAMID:
        return DegeneracyRecord(
            central_parallelogram_degenerate=_area_vanishes(
                doc, "central_parallelogram", ab),
            pyramid_near_unbounded=doc.theta_degrees > PYRAMID_UNBOUNDED_THRESHOLD,
        )
    self_intersecting = any(
        polygon_self_intersects(doc.polygon(name))
        for name in ("ziggurat_a", "ziggurat_b", "ziggurat_c")
    )
    central_triangle_vanishes = points_coincide(
        doc.point("F"), doc.point("G"),
        scale=doc.coordinate_scale(),
        tol=AREA_RTOL if not doc.exact else 0.0,
    )
    side_degenerate = (
        _area_vanishes(doc, "side_parallelogram_b", ab)
        and not central_triangle_vanishes
    )
    overlap = False
    if not self_intersecting:
        overlap = polygons_overlap(doc.polygon("ziggurat_a"), doc.polygon("ziggurat_b"))
    return DegeneracyRecord(
        ziggurat_self_intersection=self_intersecting,
        central_triangle_vanishes=central_triangle_vanishes,
        side_parallelograms_degenerate=side_degenerate,
        central_parallelogram_degenerate=_area_vanishes(
            doc, "central_parallelogram", ab),
        leg_ziggurats_overlap=overlap,
    )
