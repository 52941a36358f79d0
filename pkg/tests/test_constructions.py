import math
from fractions import Fraction

import pytest
from hypothesis import given, settings
from hypothesis import strategies as st

from zigpyr.constructions import (
    ConstructionError,
    RightTriangle,
    build_configuration,
    build_double_angle_figure,
    build_pyramid,
    build_pyramid_configuration,
    build_regular_polygon,
    build_triangle_pyramid_configuration,
    build_triangle_ziggurat_configuration,
    build_ziggurat,
    build_ziggurat_configuration,
    classify_degeneracy,
    regular_polygon_area_formula,
)
from zigpyr.geometry import Point, distance, polygon_self_intersects, signed_area
from zigpyr.numeric import GOLDEN_RATIO, QuadExt

ORIGIN = Point(0.0, 0.0)
UNIT_X = Point(1.0, 0.0)


def zig_area_formula(length, theta):
    t = math.radians(theta)
    return length**2 * math.sin(t) * (1 - math.cos(t))


class TestBuildZiggurat:
    def test_square_at_90(self):
        z = build_ziggurat(ORIGIN, UNIT_X, 90)
        assert float(z.area()) == pytest.approx(1.0)
        corners = sorted((round(x, 12), round(y, 12)) for x, y in
                         (p.as_floats() for p in z.vertices))
        assert corners == [(0, 0), (0, 1), (1, 0), (1, 1)]

    def test_equilateral_at_60(self):
        z = build_ziggurat(ORIGIN, UNIT_X, 60)
        assert float(z.area()) == pytest.approx(math.sqrt(3) / 4, rel=1e-12)
        # top side collapses
        assert distance(z.vertices[2], z.vertices[3]) == pytest.approx(0, abs=1e-15)

    def test_half_hexagon_at_120(self):
        z = build_ziggurat(ORIGIN, UNIT_X, 120)
        assert float(z.area()) == pytest.approx(3 * math.sqrt(3) / 4, rel=1e-12)

    def test_area_matches_formula(self):
        for theta in (61, 75.5, 90, 101.25, 135, 160):
            z = build_ziggurat(Point(1.0, 2.0), Point(4.0, -1.0), theta)
            length = distance(Point(1.0, 2.0), Point(4.0, -1.0))
            assert float(z.area()) == pytest.approx(zig_area_formula(length, theta), rel=1e-12)

    def test_legs_have_basis_length(self):
        z = build_ziggurat(Point(0.5, 0.5), Point(3.5, 2.0), 104)
        p, q, q_top, p_top = z.vertices
        ell = distance(p, q)
        assert distance(p, p_top) == pytest.approx(ell, rel=1e-12)
        assert distance(q, q_top) == pytest.approx(ell, rel=1e-12)
        # top parallel to basis with length ell*(1 - 2 cos theta)
        top = q_top - p_top
        basis = q - p
        assert top.cross(basis) == pytest.approx(0, abs=1e-9)
        assert distance(p_top, q_top) == pytest.approx(
            ell * abs(1 - 2 * math.cos(math.radians(104))), rel=1e-12)

    def test_self_intersects_below_60(self):
        z = build_ziggurat(ORIGIN, UNIT_X, 50)
        assert polygon_self_intersects(z.polygon())
        assert not polygon_self_intersects(build_ziggurat(ORIGIN, UNIT_X, 75).polygon())

    def test_zero_length_basis_rejected(self):
        with pytest.raises(ConstructionError):
            build_ziggurat(ORIGIN, Point(0.0, 0.0), 90)

    def test_angle_range(self):
        with pytest.raises(ConstructionError):
            build_ziggurat(ORIGIN, UNIT_X, 0)
        with pytest.raises(ConstructionError):
            build_ziggurat(ORIGIN, UNIT_X, 180)

    def test_exact_backend_square(self):
        z = build_ziggurat(Point(QuadExt(0), QuadExt(0)), Point(QuadExt(1), QuadExt(0)), 90)
        assert z.area() == 1


class TestBuildPyramid:
    def test_right_isosceles_cap_at_45(self):
        p = build_pyramid(ORIGIN, UNIT_X, 45)
        assert float(p.area()) == pytest.approx(0.25)

    def test_equilateral_at_60(self):
        p = build_pyramid(ORIGIN, UNIT_X, 60)
        assert p.leg_ratio() == pytest.approx(1.0)
        z = build_ziggurat(ORIGIN, UNIT_X, 60)
        assert float(p.area()) == pytest.approx(float(z.area()), rel=1e-12)

    def test_golden_triangle_at_72(self):
        p = build_pyramid(ORIGIN, UNIT_X, 72)
        assert p.leg_ratio() == pytest.approx(float(GOLDEN_RATIO), rel=1e-12)
        apex = p.apex()
        assert distance(ORIGIN, apex) == pytest.approx(float(GOLDEN_RATIO), rel=1e-12)

    def test_apex_height(self):
        p = build_pyramid(Point(2.0, 1.0), Point(5.0, 1.0), 70)
        assert p.apex().y - 1.0 == pytest.approx(1.5 * math.tan(math.radians(70)), rel=1e-12)

    def test_area_formula(self):
        for theta in (45, 60, 72, 89):
            p = build_pyramid(ORIGIN, UNIT_X, theta)
            assert float(p.area()) == pytest.approx(
                math.tan(math.radians(theta)) / 4, rel=1e-12)

    def test_unbounded_angle_rejected(self):
        with pytest.raises(ConstructionError):
            build_pyramid(ORIGIN, UNIT_X, 90)


class TestRegularPolygon:
    def test_square(self):
        poly = build_regular_polygon(4, ORIGIN, UNIT_X)
        assert float(signed_area(poly)) == pytest.approx(1.0)

    def test_hexagon(self):
        poly = build_regular_polygon(6, ORIGIN, UNIT_X)
        assert float(signed_area(poly)) == pytest.approx(3 * math.sqrt(3) / 2, rel=1e-12)
        assert float(signed_area(poly)) == pytest.approx(regular_polygon_area_formula(6, 1.0))

    def test_pentagon_vs_108_ziggurat_fraction(self):
        # ziggurat(l, 108) is the "basis" slab of the regular pentagon; the
        # covered fraction is (1 + phi) / (2 + phi)
        phi = float(GOLDEN_RATIO)
        pentagon = build_regular_polygon(5, ORIGIN, UNIT_X)
        zig = build_ziggurat(ORIGIN, UNIT_X, 108)
        fraction = float(zig.area()) / float(signed_area(pentagon))
        assert fraction == pytest.approx((1 + phi) / (2 + phi), rel=1e-12)

    def test_all_sides_equal(self):
        poly = build_regular_polygon(8, Point(1.0, 1.0), Point(2.0, 2.0))
        sides = [distance(p, q) for p, q in poly.edges()]
        assert all(s == pytest.approx(sides[0], rel=1e-9) for s in sides)

    def test_small_n_rejected(self):
        with pytest.raises(ConstructionError):
            build_regular_polygon(2, ORIGIN, UNIT_X)

    def test_orientation(self):
        left = build_regular_polygon(4, ORIGIN, UNIT_X, "left")
        right = build_regular_polygon(4, ORIGIN, UNIT_X, "right")
        assert float(signed_area(left)) > 0 > float(signed_area(right))


class TestZigguratConfiguration:
    def test_classical_squares(self):
        doc = build_ziggurat_configuration(RightTriangle(3, 4), 90)
        areas = doc.areas()
        assert areas["ziggurat_a"] == pytest.approx(9)
        assert areas["ziggurat_b"] == pytest.approx(16)
        assert areas["ziggurat_c"] == pytest.approx(25)
        # |FG| is the top of the internal square
        assert distance(doc.point("F"), doc.point("G")) == pytest.approx(5)

    def test_canonical_pose(self):
        doc = build_ziggurat_configuration(RightTriangle(3, 4), 75)
        assert doc.point("C").as_floats() == (0.0, 0.0)
        assert doc.point("A").as_floats() == (4.0, 0.0)
        assert doc.point("B").as_floats() == (0.0, 3.0)

    def test_f_and_g_coincide_at_60(self):
        doc = build_ziggurat_configuration(RightTriangle(3, 4), 60)
        assert distance(doc.point("F"), doc.point("G")) <= 1e-12 * 5
        assert doc.areas()["central_triangle"] == pytest.approx(0, abs=1e-12)

    def test_central_parallelogram_degenerates_at_135(self):
        doc = build_ziggurat_configuration(RightTriangle(1, 1), 135)
        assert doc.areas()["central_parallelogram"] == pytest.approx(0, abs=1e-12)

    def test_lemma_vectors(self):
        for theta in (60, 77.3, 90, 101, 120, 135):
            doc = build_ziggurat_configuration(RightTriangle(3, 4), theta)
            c = doc.point("C'")
            lhs1 = doc.point("D''") - doc.point("F")
            rhs1 = doc.point("D'") - c
            lhs2 = doc.point("E''") - doc.point("G")
            rhs2 = doc.point("E'") - c
            for lhs, rhs in ((lhs1, rhs1), (lhs2, rhs2)):
                assert abs(lhs.x - rhs.x) <= 1e-12 * 5
                assert abs(lhs.y - rhs.y) <= 1e-12 * 5

    def test_rotated_copy_congruence(self):
        # triangle D''FA is a rotated copy of ABC: sides {a, b, c}
        doc = build_ziggurat_configuration(RightTriangle(3, 4), 112)
        d_pp, f, a_pt = doc.point("D''"), doc.point("F"), doc.point("A")
        sides = sorted([distance(d_pp, f), distance(f, a_pt), distance(a_pt, d_pp)])
        assert sides == pytest.approx([3, 4, 5], rel=1e-12)

    def test_similarity_ratio(self):
        for theta in (60, 70, 90, 120, 135, 150, 40):
            doc = build_ziggurat_configuration(RightTriangle(2, 3), theta)
            ratio = distance(doc.point("F"), doc.point("G")) / doc.point("A").as_floats()[0] * 3 / math.hypot(2, 3)
            expected = abs(1 - 2 * math.cos(math.radians(theta)))
            got = distance(doc.point("F"), doc.point("G")) / math.hypot(2, 3)
            assert got == pytest.approx(expected, rel=1e-9, abs=1e-12)

    def test_exact_backend_at_135(self):
        doc = build_ziggurat_configuration(RightTriangle(1, 1), 135, exact=True)
        assert doc.exact
        area_c = doc.polygon_area("ziggurat_c")
        area_a = doc.polygon_area("ziggurat_a")
        area_b = doc.polygon_area("ziggurat_b")
        assert area_c == area_a + area_b  # exact equality in Q(sqrt 2)
        assert doc.polygon_area("central_parallelogram") == 0

    def test_polygon_closure(self):
        doc = build_ziggurat_configuration(RightTriangle(2, 5), 100)
        for cycle in doc.polygons.values():
            for name in cycle:
                assert name in doc.named_points


class TestPyramidConfiguration:
    def test_sixty_degrees(self):
        doc = build_pyramid_configuration(RightTriangle(3, 4), 60)
        assert distance(doc.point("B'"), doc.point("C'")) == pytest.approx(3, rel=1e-12)
        assert distance(doc.point("C'"), doc.point("A'")) == pytest.approx(4, rel=1e-12)

    def test_central_parallelogram_collapses_at_45(self):
        doc = build_pyramid_configuration(RightTriangle(3, 4), 45)
        assert doc.areas()["central_parallelogram"] == pytest.approx(0, abs=1e-12)

    def test_leg_lengths_scale_by_r(self):
        for theta in (50, 60, 72, 85):
            doc = build_pyramid_configuration(RightTriangle(2, 3), theta)
            r = 1 / (2 * math.cos(math.radians(theta)))
            assert distance(doc.point("B'"), doc.point("C'")) == pytest.approx(2 * r, rel=1e-12)
            assert distance(doc.point("A'"), doc.point("C'")) == pytest.approx(3 * r, rel=1e-12)

    def test_rotation_homothety_image(self):
        # rotating ABC about A by theta then scaling by r sends B to C', C to B'
        doc = build_pyramid_configuration(RightTriangle(3, 4), 66)
        r = 1 / (2 * math.cos(math.radians(66)))
        s, c = math.sin(math.radians(66)), math.cos(math.radians(66))
        a_pt = doc.point("A")
        for src, dst in (("B", "C'"), ("C", "B'")):
            v = doc.point(src) - a_pt
            img = a_pt + v.rotate_sincos(s, c).scale(r)
            assert distance(img, doc.point(dst)) <= 1e-12 * 10

    def test_angle_range_rejected(self):
        with pytest.raises(ConstructionError):
            build_pyramid_configuration(RightTriangle(3, 4), 90)

    def test_build_configuration_dispatch(self):
        assert build_configuration(RightTriangle(1, 1), 80, "pyramid").family == "pyramid"
        assert build_configuration(RightTriangle(1, 1), 80, "ziggurat").family == "ziggurat"
        with pytest.raises(ConstructionError):
            build_configuration(RightTriangle(1, 1), 80, "cone")


class TestDoubleAngleFigure:
    def test_thirty_degrees(self):
        doc = build_double_angle_figure(30)
        assert distance(doc.point("A"), doc.point("B")) == pytest.approx(1.5)
        assert distance(doc.point("C"), doc.point("B")) == pytest.approx(math.sqrt(3) / 2)

    def test_forty_five_degrees(self):
        doc = build_double_angle_figure(45)
        assert distance(doc.point("A"), doc.point("B")) == pytest.approx(1.0)
        assert distance(doc.point("C"), doc.point("B")) == pytest.approx(1.0)

    def test_similarity_ratios(self):
        for theta in (15, 22.5, 30, 44):
            doc = build_double_angle_figure(theta)
            ab = distance(doc.point("A"), doc.point("B"))
            cb = distance(doc.point("C"), doc.point("B"))
            bc_small = distance(doc.point("B'"), doc.point("C'"))
            ob = distance(doc.point("O"), doc.point("B'"))
            assert ab / bc_small == pytest.approx(cb / ob, rel=1e-12)
            assert ab / cb == pytest.approx(
                math.cos(math.radians(theta)) / math.sin(math.radians(theta)), rel=1e-12)

    def test_range_rejected(self):
        with pytest.raises(ConstructionError):
            build_double_angle_figure(46)
        with pytest.raises(ConstructionError):
            build_double_angle_figure(0)


class TestDegeneracyClassification:
    def test_self_intersection_below_60(self):
        doc = build_ziggurat_configuration(RightTriangle(1, 1), 50)
        assert doc.degeneracy.ziggurat_self_intersection

    def test_overlap_above_135(self):
        doc = build_ziggurat_configuration(RightTriangle(1, 1), 140)
        assert doc.degeneracy.leg_ziggurats_overlap

    def test_touching_at_135_is_not_overlap(self):
        doc = build_ziggurat_configuration(RightTriangle(1, 1), 135)
        assert not doc.degeneracy.leg_ziggurats_overlap
        assert doc.degeneracy.central_parallelogram_degenerate

    def test_side_parallelograms_at_90(self):
        doc = build_ziggurat_configuration(RightTriangle(3, 4), 90, exact=True)
        assert doc.degeneracy.side_parallelograms_degenerate
        assert not doc.degeneracy.central_triangle_vanishes

    def test_central_triangle_at_60(self):
        doc = build_ziggurat_configuration(RightTriangle(3, 4), 60)
        rec = doc.degeneracy
        assert rec.central_triangle_vanishes
        assert not rec.side_parallelograms_degenerate

    def test_clean_interior_angle(self):
        doc = build_ziggurat_configuration(RightTriangle(3, 4), 100)
        assert not doc.degeneracy.any_flag()

    def test_pyramid_near_unbounded(self):
        assert build_pyramid_configuration(RightTriangle(3, 4), 89.9).degeneracy.pyramid_near_unbounded
        assert not build_pyramid_configuration(RightTriangle(3, 4), 80).degeneracy.pyramid_near_unbounded

    def test_classify_matches_document_record(self):
        doc = build_ziggurat_configuration(RightTriangle(2, 3), 135)
        assert classify_degeneracy(doc) == doc.degeneracy


legs = st.floats(min_value=0.2, max_value=8)
coords = st.floats(min_value=-5, max_value=5)
thetas_all = st.floats(min_value=20, max_value=170)


@st.composite
def scalene_triangles(draw):
    a_pt = Point(draw(coords), draw(coords))
    b_pt = a_pt + Point(draw(st.floats(min_value=0.5, max_value=6)),
                        draw(st.floats(min_value=-3, max_value=3)))
    c_pt = a_pt + Point(draw(st.floats(min_value=-3, max_value=3)),
                        draw(st.floats(min_value=0.5, max_value=6)))
    cross = (b_pt - a_pt).cross(c_pt - a_pt)
    if abs(cross) < 0.25:
        c_pt = c_pt + Point(-1.0, 2.0)
    return a_pt, b_pt, c_pt


class TestConstructionProperties:
    @settings(max_examples=200, deadline=None)
    @given(scalene_triangles(), thetas_all)
    def test_lemma_holds_for_arbitrary_triangles(self, tri, theta):
        # the parallelogram lemma does not need the right angle at C
        a_pt, b_pt, c_pt = tri
        doc = build_triangle_ziggurat_configuration(a_pt, b_pt, c_pt, theta)
        scale = doc.coordinate_scale()
        cp = doc.point("C'")
        for tip, top in (("D''", "D'"), ("E''", "E'")):
            lhs = doc.point(tip) - doc.point("F" if tip == "D''" else "G")
            rhs = doc.point(top) - cp
            assert abs(lhs.x - rhs.x) <= 1e-12 * max(scale, 1) * 10
            assert abs(lhs.y - rhs.y) <= 1e-12 * max(scale, 1) * 10

    @settings(max_examples=200, deadline=None)
    @given(scalene_triangles(), st.floats(min_value=20, max_value=89))
    def test_pyramid_parallelogram_for_arbitrary_triangles(self, tri, theta):
        a_pt, b_pt, c_pt = tri
        doc = build_triangle_pyramid_configuration(a_pt, b_pt, c_pt, theta)
        # CA'C'B' closes: A' + B' = C + C'
        lhs = doc.point("A'") + doc.point("B'")
        rhs = doc.point("C") + doc.point("C'")
        scale = doc.coordinate_scale()
        assert abs(lhs.x - rhs.x) <= 1e-11 * max(scale, 1)
        assert abs(lhs.y - rhs.y) <= 1e-11 * max(scale, 1)

    @settings(max_examples=150, deadline=None)
    @given(legs, legs, thetas_all)
    def test_ziggurat_area_formula_matches_kernel(self, a, b, theta):
        doc = build_ziggurat_configuration(RightTriangle(a, b), theta)
        c = math.hypot(a, b)
        for name, ell in (("ziggurat_a", a), ("ziggurat_b", b), ("ziggurat_c", c)):
            formula = zig_area_formula(ell, theta)
            # below 60 degrees the trapezium is crossed; the shoelace value
            # is the algebraic area, compare only in the simple regime
            if theta >= 60:
                assert doc.areas()[name] == pytest.approx(formula, rel=1e-9)

    @settings(max_examples=150, deadline=None)
    @given(legs, legs, st.floats(min_value=30, max_value=89))
    def test_pyramid_area_formula_matches_kernel(self, a, b, theta):
        doc = build_pyramid_configuration(RightTriangle(a, b), theta)
        c = math.hypot(a, b)
        t = math.tan(math.radians(theta))
        for name, ell in (("pyramid_a", a), ("pyramid_b", b), ("pyramid_c", c)):
            assert doc.areas()[name] == pytest.approx(ell * ell * t / 4, rel=1e-9)
