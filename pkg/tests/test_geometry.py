import math
from fractions import Fraction

import pytest
from hypothesis import given, settings
from hypothesis import strategies as st

from zigpyr.geometry import (
    Point,
    Polygon,
    Transform,
    distance,
    point_in_polygon,
    polygon_self_intersects,
    polygons_overlap,
    rotate_about,
    segments_properly_intersect,
    signed_area,
)
from zigpyr.numeric import QuadExt


def P(x, y):
    return Point(float(x), float(y))


ORIGIN = P(0, 0)


class TestRotateAbout:
    def test_quarter_turn(self):
        q = rotate_about(P(1, 0), ORIGIN, 90)
        assert q.x == pytest.approx(0, abs=1e-15)
        assert q.y == pytest.approx(1)

    def test_sixty_degrees(self):
        q = rotate_about(P(1, 0), ORIGIN, 60)
        assert q.x == pytest.approx(0.5)
        assert q.y == pytest.approx(math.sqrt(3) / 2)

    def test_fixed_point(self):
        p = P(2.5, -1.25)
        q = rotate_about(p, p, 137.0)
        assert q.x == pytest.approx(p.x) and q.y == pytest.approx(p.y)

    def test_exact_backend(self):
        p = Point(QuadExt(1), QuadExt(0))
        q = rotate_about(p, Point(QuadExt(0), QuadExt(0)), 90)
        assert q.x == 0 and q.y == 1

    def test_preserves_distance_to_center(self):
        center = P(1, 2)
        p = P(4, -1)
        q = rotate_about(p, center, 77.3)
        assert distance(center, q) == pytest.approx(distance(center, p))


class TestSignedArea:
    def test_unit_square_ccw(self):
        sq = Polygon([P(0, 0), P(1, 0), P(1, 1), P(0, 1)])
        assert signed_area(sq) == pytest.approx(1.0)

    def test_right_triangle(self):
        tri = Polygon([P(0, 0), P(4, 0), P(0, 3)])
        assert signed_area(tri) == pytest.approx(6.0)

    def test_orientation_flip(self):
        tri = Polygon([P(0, 3), P(4, 0), P(0, 0)])
        assert signed_area(tri) == pytest.approx(-6.0)

    def test_exact_backend(self):
        tri = Polygon([
            Point(QuadExt(0), QuadExt(0)),
            Point(QuadExt(4), QuadExt(0)),
            Point(QuadExt(0), QuadExt(3)),
        ])
        assert signed_area(tri) == Fraction(6)


class TestSegmentIntersection:
    def test_crossing(self):
        assert segments_properly_intersect((P(0, 0), P(1, 1)), (P(0, 1), P(1, 0)))

    def test_endpoint_touch_does_not_count(self):
        assert not segments_properly_intersect((P(0, 0), P(1, 0)), (P(1, 0), P(2, 0)))

    def test_parallel_disjoint(self):
        assert not segments_properly_intersect((P(0, 0), P(1, 0)), (P(0, 1), P(1, 1)))

    def test_collinear_overlap_is_not_proper(self):
        assert not segments_properly_intersect((P(0, 0), P(2, 0)), (P(1, 0), P(3, 0)))

    def test_t_junction_is_not_proper(self):
        assert not segments_properly_intersect((P(0, 0), P(2, 0)), (P(1, 0), P(1, 1)))


class TestSelfIntersection:
    def test_convex_quad(self):
        assert not polygon_self_intersects(Polygon([P(0, 0), P(1, 0), P(1, 1), P(0, 1)]))

    def test_bowtie(self):
        assert polygon_self_intersects(Polygon([P(0, 0), P(1, 1), P(1, 0), P(0, 1)]))


class TestPolygonOverlap:
    def test_disjoint_squares(self):
        s1 = Polygon([P(0, 0), P(1, 0), P(1, 1), P(0, 1)])
        s2 = Polygon([P(2, 0), P(3, 0), P(3, 1), P(2, 1)])
        assert not polygons_overlap(s1, s2)

    def test_overlapping_translate(self):
        s1 = Polygon([P(0, 0), P(1, 0), P(1, 1), P(0, 1)])
        s2 = Polygon([P(0.5, 0.5), P(1.5, 0.5), P(1.5, 1.5), P(0.5, 1.5)])
        assert polygons_overlap(s1, s2)

    def test_shared_edge_is_touching(self):
        s1 = Polygon([P(0, 0), P(1, 0), P(1, 1), P(0, 1)])
        s2 = Polygon([P(1, 0), P(2, 0), P(2, 1), P(1, 1)])
        assert not polygons_overlap(s1, s2)

    def test_containment(self):
        outer = Polygon([P(0, 0), P(4, 0), P(4, 4), P(0, 4)])
        inner = Polygon([P(1, 1), P(2, 1), P(2, 2), P(1, 2)])
        assert polygons_overlap(outer, inner)

    def test_rejects_non_simple(self):
        bowtie = Polygon([P(0, 0), P(1, 1), P(1, 0), P(0, 1)])
        square = Polygon([P(0, 0), P(1, 0), P(1, 1), P(0, 1)])
        with pytest.raises(ValueError):
            polygons_overlap(bowtie, square)


class TestPointInPolygon:
    def test_inside(self):
        sq = Polygon([P(0, 0), P(2, 0), P(2, 2), P(0, 2)])
        assert point_in_polygon(P(1, 1), sq)

    def test_boundary_is_outside(self):
        sq = Polygon([P(0, 0), P(2, 0), P(2, 2), P(0, 2)])
        assert not point_in_polygon(P(1, 0), sq)
        assert not point_in_polygon(P(0, 0), sq)

    def test_outside(self):
        sq = Polygon([P(0, 0), P(2, 0), P(2, 2), P(0, 2)])
        assert not point_in_polygon(P(3, 1), sq)


class TestTransform:
    def test_rotation_scale_about_center(self):
        t = Transform(center=P(1, 0), degrees=90, scale=2.0)
        q = t.apply(P(2, 0))
        assert q.x == pytest.approx(1) and q.y == pytest.approx(2)

    def test_zero_scale_rejected(self):
        with pytest.raises(ValueError):
            Transform(center=ORIGIN, scale=0.0)


coords = st.floats(min_value=-50, max_value=50, allow_nan=False)
angles = st.floats(min_value=-360, max_value=360, allow_nan=False)


@st.composite
def simple_triangles(draw):
    pts = [P(draw(coords), draw(coords)) for _ in range(3)]
    cross = (pts[1] - pts[0]).cross(pts[2] - pts[0])
    if abs(cross) < 1e-3:
        pts[2] = pts[2] + P(1.0, 2.0)
    return Polygon(pts)


class TestKernelProperties:
    @settings(max_examples=150)
    @given(simple_triangles(), angles, coords, coords)
    def test_area_invariant_under_rigid_motion(self, tri, theta, dx, dy):
        moved = Polygon([
            rotate_about(v, P(0.5, -2.0), theta) + P(dx, dy) for v in tri.vertices
        ])
        a0, a1 = signed_area(tri), signed_area(moved)
        assert abs(abs(a1) - abs(a0)) <= 1e-12 * max(abs(a0), 1.0) * 100

    @settings(max_examples=100)
    @given(simple_triangles(), st.floats(min_value=0.1, max_value=5))
    def test_area_scales_quadratically(self, tri, k):
        scaled = Polygon([v.scale(k) for v in tri.vertices])
        assert signed_area(scaled) == pytest.approx(signed_area(tri) * k * k, rel=1e-9)

    @settings(max_examples=100)
    @given(st.lists(st.tuples(coords, coords), min_size=4, max_size=8, unique=True))
    def test_fan_decomposition(self, raw):
        poly = Polygon([P(x, y) for x, y in raw])
        total = signed_area(poly)
        fan = 0.0
        v0 = poly.vertices[0]
        for i in range(1, len(poly) - 1):
            fan += signed_area([v0, poly.vertices[i], poly.vertices[i + 1]])
        assert fan == pytest.approx(total, abs=1e-6 * max(1.0, abs(total)))

    @settings(max_examples=150)
    @given(coords, coords, angles)
    def test_rotate_round_trip(self, x, y, theta):
        p = P(x, y)
        center = P(-3, 7)
        q = rotate_about(rotate_about(p, center, theta), center, -theta)
        assert abs(q.x - p.x) <= 1e-12 * max(abs(p.x), 1) * 100
        assert abs(q.y - p.y) <= 1e-12 * max(abs(p.y), 1) * 100
