import math
import random
from fractions import Fraction

import pytest
from hypothesis import given, settings
from hypothesis import strategies as st

from zigpyr.trig_symbolic import (
    Add,
    BivarPoly,
    CannotNormalizeError,
    Mul,
    Neg,
    Num,
    Pow,
    RuleSet,
    Sub,
    Trig,
    TrigParseError,
    evaluate_expr,
    normalize,
    normalize_traced,
    parse_trig,
    prove_identity,
    prove_identity_text,
    to_text,
    verify_double_angle_relation,
)

CHAIN = "1 + 4*(1 - 2*cos(t))*sin(270 - t) + 2*sin(270 - 2*t)"
CHAIN_RHS = "2 + (1 - 2*cos(t))^2"


def poly(d):
    return BivarPoly({k: Fraction(v) for k, v in d.items()})


class TestParser:
    def test_double_angle_leaf(self):
        e = parse_trig("cos(2t)")
        assert e == Trig("cos", 0, 2)
        assert parse_trig("cos(2*t)") == e

    def test_chain_expression(self):
        e = parse_trig(CHAIN)
        shifted = [n for n in _walk(e) if isinstance(n, Trig) and n.quarter_turns == 3]
        assert len(shifted) == 2
        assert {n.multiple for n in shifted} == {-1, -2}

    def test_second_variable_rejected(self):
        with pytest.raises(TrigParseError) as exc:
            parse_trig("sin(t + u)")
        assert "unsupported" in str(exc.value)
        assert exc.value.position == 8

    def test_constant_must_be_multiple_of_90(self):
        with pytest.raises(TrigParseError):
            parse_trig("sin(45 - t)")

    def test_syntax_error_has_position(self):
        with pytest.raises(TrigParseError) as exc:
            parse_trig("1 + * 2")
        assert exc.value.position == 4

    def test_rational_literals(self):
        assert parse_trig("1/2") == Num(Fraction(1, 2))
        assert parse_trig("3/4*cos(t)") == Mul(Num(Fraction(3, 4)), Trig("cos", 0, 1))

    def test_division_of_expressions_rejected(self):
        with pytest.raises(TrigParseError):
            parse_trig("cos(t)/2")

    def test_negative_argument(self):
        assert parse_trig("sin(-2*t)") == Trig("sin", 0, -2)
        assert parse_trig("sin(270)") == Trig("sin", 3, 0)

    def test_round_trip_examples(self):
        for text in (CHAIN, CHAIN_RHS, "cos(2t)", "sin(-t)", "sin(270)", "-3/2*sin(t)^3"):
            e = parse_trig(text)
            assert parse_trig(to_text(e)) == e


def _walk(e):
    yield e
    for name in ("left", "right", "operand", "base"):
        child = getattr(e, name, None)
        if child is not None and not isinstance(child, int):
            yield from _walk(child)


class TestNormalize:
    def test_shift_table_matches_float_oracle(self):
        # sin(270 - t) -> -cos t, checked numerically at random angles
        e = parse_trig("sin(270 - t)")
        p = normalize(e, RuleSet())
        assert p == poly({(0, 1): -1})
        rng = random.Random(7)
        for _ in range(10):
            th = rng.uniform(0.0, 360.0)
            assert math.isclose(
                p.evaluate(math.sin(math.radians(th)), math.cos(math.radians(th))),
                evaluate_expr(e, th),
                abs_tol=1e-12,
            )

    def test_every_shift_quadrant(self):
        rng = random.Random(3)
        for k in range(-4, 9):
            for fn in ("sin", "cos"):
                for m in (-2, -1, 0, 1, 2):
                    e = Trig(fn, k, m)
                    p = normalize(e, RuleSet())
                    for _ in range(5):
                        th = rng.uniform(0.0, 360.0)
                        assert math.isclose(
                            p.evaluate(math.sin(math.radians(th)), math.cos(math.radians(th))),
                            evaluate_expr(e, th),
                            abs_tol=1e-11,
                        ), (fn, k, m, th)

    def test_chain_normal_form(self):
        p = normalize(parse_trig(CHAIN), RuleSet.non_circular())
        assert p == poly({(0, 0): 3, (0, 1): -4, (0, 2): 4})

    def test_chain_rhs_same_normal_form(self):
        p = normalize(parse_trig(CHAIN_RHS), RuleSet.non_circular())
        assert p == poly({(0, 0): 3, (0, 1): -4, (0, 2): 4})

    def test_double_cos_via_angle_sum_only(self):
        rules = RuleSet(angle_sum=True, double_cos_paper=False, double_sin=False,
                        pythagorean=False)
        p = normalize(parse_trig("cos(2t)"), rules)
        assert p == poly({(0, 2): 1, (2, 0): -1})

    def test_multiple_angle_error_without_rules(self):
        rules = RuleSet(angle_sum=False, double_sin=False, double_cos_paper=False,
                        pythagorean=False)
        with pytest.raises(CannotNormalizeError):
            normalize(parse_trig("cos(2t)"), rules)

    def test_shift_requires_rule(self):
        rules = RuleSet(angle_shift=False)
        with pytest.raises(CannotNormalizeError):
            normalize(parse_trig("sin(270 - t)"), rules)

    def test_bare_angle_variable_rejected(self):
        with pytest.raises(CannotNormalizeError):
            normalize(parse_trig("t + 1"), RuleSet())

    def test_triple_angle_via_angle_sum(self):
        p = normalize(parse_trig("cos(3*t)"), RuleSet(pythagorean=False, double_cos_paper=False))
        # cos 3t = cos t (c^2 - s^2) - 2 s^2 c
        assert p == poly({(0, 3): 1, (2, 1): -3})

    def test_pythagorean_reduces_sin_powers(self):
        p, fired = normalize_traced(parse_trig("sin(t)^2"), RuleSet())
        assert p == poly({(0, 0): 1, (0, 2): -1})
        assert "pythagorean" in fired

    def test_rule_isolation_without_pythagorean(self):
        p, fired = normalize_traced(parse_trig("sin(t)^2"), RuleSet.non_circular())
        assert p == poly({(2, 0): 1})
        assert "pythagorean" not in fired

    def test_determinism(self):
        e = parse_trig(CHAIN)
        p1, f1 = normalize_traced(e, RuleSet())
        p2, f2 = normalize_traced(e, RuleSet())
        assert p1.coeffs == p2.coeffs and f1 == f2


class TestProver:
    def test_chain_proved_without_pythagorean(self):
        report = prove_identity_text(f"{CHAIN} = {CHAIN_RHS}", RuleSet.non_circular())
        assert report.proved
        assert "pythagorean" not in report.rules_used
        assert "angle_shift" in report.rules_used
        assert "double_cos_paper" in report.rules_used

    def test_identity_one_fails_without_double_cos_or_pythagorean(self):
        rules = RuleSet(double_cos_paper=False, double_sin=False, pythagorean=False)
        report = prove_identity_text("cos(2t) = 2*cos(t)^2 - 1", rules)
        assert not report.proved

    def test_identity_one_with_double_cos(self):
        rules = RuleSet(double_cos_paper=True, pythagorean=False)
        report = prove_identity_text("cos(2t) = 2*cos(t)^2 - 1", rules)
        assert report.proved

    def test_identity_one_with_pythagorean(self):
        rules = RuleSet(double_cos_paper=False, pythagorean=True)
        report = prove_identity_text("cos(2t) = 2*cos(t)^2 - 1", rules)
        assert report.proved
        assert "pythagorean" in report.rules_used

    def test_double_sine(self):
        report = prove_identity_text("sin(2t) = 2*sin(t)*cos(t)")
        assert report.proved

    def test_rules_used_lists_only_fired(self):
        report = prove_identity_text("cos(t) = cos(t)")
        assert report.rules_used == ()

    def test_to_dict(self):
        d = prove_identity_text("sin(2t) = 2*sin(t)*cos(t)").to_dict()
        assert d["proved"] is True
        assert d["lhs_normal"] == d["rhs_normal"]


class TestDoubleAngleRelation:
    @pytest.mark.parametrize("theta,value", [(30, 0.75), (45, math.sqrt(2) / 2), (60, None)])
    def test_examples(self, theta, value):
        assert verify_double_angle_relation(theta)
        if value is not None:
            t = math.radians(theta)
            assert math.sin(t) * (1 + math.cos(2 * t)) == pytest.approx(value)


# -- property tests ----------------------------------------------------------

trig_leaves = st.builds(
    Trig,
    st.sampled_from(["sin", "cos"]),
    st.integers(min_value=-4, max_value=8),
    st.integers(min_value=-3, max_value=3),
)
numbers = st.fractions(min_value=-3, max_value=3, max_denominator=4).map(Num)


def _exprs(depth: int):
    if depth <= 0:
        return st.one_of(numbers, trig_leaves)
    sub = _exprs(depth - 1)
    return st.one_of(
        numbers,
        trig_leaves,
        st.builds(Add, sub, sub),
        st.builds(Sub, sub, sub),
        st.builds(Mul, sub, sub),
        st.builds(Neg, sub),
        st.builds(Pow, sub, st.integers(min_value=0, max_value=3)),
    )


expressions = _exprs(3)


class TestProperties:
    @settings(max_examples=200, deadline=None)
    @given(expressions)
    def test_print_parse_round_trip(self, e):
        # one parse canonicalizes (e.g. folds negative literals); after that
        # printing and re-parsing is the identity
        canonical = parse_trig(to_text(e))
        assert parse_trig(to_text(canonical)) == canonical

    @settings(max_examples=150, deadline=None)
    @given(expressions, st.floats(min_value=1.0, max_value=89.0))
    def test_normal_form_evaluation_matches_direct(self, e, theta):
        direct = evaluate_expr(e, theta)
        s, c = math.sin(math.radians(theta)), math.cos(math.radians(theta))
        for rules in (RuleSet(), RuleSet.non_circular()):
            p = normalize(e, rules)
            assert math.isclose(p.evaluate(s, c), direct,
                                rel_tol=1e-10, abs_tol=1e-10 * max(1.0, abs(direct)))

    @settings(max_examples=100, deadline=None)
    @given(expressions)
    def test_rule_isolation(self, e):
        p, fired = normalize_traced(e, RuleSet.non_circular())
        assert "pythagorean" not in fired

    @settings(max_examples=100, deadline=None)
    @given(expressions, expressions)
    def test_soundness_of_proofs(self, lhs, rhs):
        report = prove_identity(lhs, rhs, RuleSet())
        if report.proved:
            rng = random.Random(1234)
            for _ in range(20):
                th = rng.uniform(1.0, 89.0)
                lv, rv = evaluate_expr(lhs, th), evaluate_expr(rhs, th)
                assert math.isclose(lv, rv, rel_tol=1e-9, abs_tol=1e-9 * max(1.0, abs(lv)))
