"""Trigonometric expressions in one angle variable, and an identity prover.

Expressions are parsed from a small grammar (see :func:`parse_trig`), then
normalized into polynomials in ``s = sin t`` and ``c = cos t`` under a
whitelisted rule set.  Two expressions are provably equal iff their normal
forms coincide coefficient-wise; the rule whitelist makes it possible to
audit which rewrite rules an identity chain actually needs -- in particular
whether it can avoid the Pythagorean identity ``s^2 + c^2 = 1``.

Grammar (CLI ``prove`` input format)::

    expr    := term (('+' | '-') term)*
    term    := unary ('*' unary)*
    unary   := '-' unary | power
    power   := atom ('^' INTEGER)?
    atom    := INTEGER ('/' INTEGER)?        -- rational literal
             | 't'                           -- the angle variable
             | ('sin' | 'cos') '(' linear ')'
             | '(' expr ')'
    linear  := ['-'] linterm (('+' | '-') linterm)*
    linterm := INTEGER ('*'? 't')? | 't'

Trig arguments are integer-linear forms ``k*90 +/- n*t`` in degrees: the
constant part must be a multiple of 90.  Anything else is rejected at parse
time with a position.
"""

from __future__ import annotations

import math
from dataclasses import dataclass, field
from fractions import Fraction
from typing import Iterator, Optional, Union

from .numeric import scalar_eq

RULE_NAMES = ("angle_shift", "angle_sum", "double_sin", "double_cos_paper", "pythagorean")


@dataclass(frozen=True)
class RuleSet:
    """Whitelist of admissible rewrite rules.

    angle_shift       sin/cos of (k*90 +/- n*t) -> +/- sin/cos of (n*t)
    angle_sum         sum/difference formulas (drives multiple-angle recurrences)
    double_sin        sin 2x = 2 sin x cos x
    double_cos_paper  cos 2x = 2 cos^2 x - 1 taken as a primitive rule
    pythagorean       s^2 -> 1 - c^2
    """

    angle_shift: bool = True
    angle_sum: bool = True
    double_sin: bool = True
    double_cos_paper: bool = True
    pythagorean: bool = True

    @classmethod
    def non_circular(cls) -> "RuleSet":
        """Everything except the Pythagorean identity."""
        return cls(pythagorean=False)

    def enabled(self) -> tuple[str, ...]:
        return tuple(name for name in RULE_NAMES if getattr(self, name))


class TrigParseError(ValueError):
    def __init__(self, message: str, position: int):
        super().__init__(f"{message} (at position {position})")
        self.position = position


class CannotNormalizeError(ValueError):
    """The enabled rule set cannot reduce the expression to a polynomial."""


# ---------------------------------------------------------------------------
# AST
# ---------------------------------------------------------------------------

@dataclass(frozen=True)
class Num:
    value: Fraction


@dataclass(frozen=True)
class AngleVar:
    """The bare angle variable; parseable but has no polynomial normal form."""


@dataclass(frozen=True)
class Trig:
    fn: str              # "sin" | "cos"
    quarter_turns: int   # k in k*90 degrees
    multiple: int        # m in m*t (sign included)


@dataclass(frozen=True)
class Add:
    left: "TrigExpr"
    right: "TrigExpr"


@dataclass(frozen=True)
class Sub:
    left: "TrigExpr"
    right: "TrigExpr"


@dataclass(frozen=True)
class Mul:
    left: "TrigExpr"
    right: "TrigExpr"


@dataclass(frozen=True)
class Neg:
    operand: "TrigExpr"


@dataclass(frozen=True)
class Pow:
    base: "TrigExpr"
    exponent: int


TrigExpr = Union[Num, AngleVar, Trig, Add, Sub, Mul, Neg, Pow]


def _linear_text(k: int, m: int) -> str:
    parts = []
    if k != 0:
        parts.append(str(90 * k))
    if m != 0:
        mt = "t" if abs(m) == 1 else f"{abs(m)}*t"
        if not parts:
            parts.append(mt if m > 0 else f"-{mt}")
        else:
            parts.append(f"+ {mt}" if m > 0 else f"- {mt}")
    if not parts:
        return "0"
    return " ".join(parts)


def to_text(e: TrigExpr, _prec: int = 0) -> str:
    """Render an AST; the result re-parses to an equal AST."""
    if isinstance(e, Num):
        txt = str(e.value)
        return f"({txt})" if e.value < 0 and _prec > 1 else txt
    if isinstance(e, AngleVar):
        return "t"
    if isinstance(e, Trig):
        return f"{e.fn}({_linear_text(e.quarter_turns, e.multiple)})"
    if isinstance(e, Add):
        txt = f"{to_text(e.left, 1)} + {to_text(e.right, 1)}"
        return f"({txt})" if _prec > 1 else txt
    if isinstance(e, Sub):
        txt = f"{to_text(e.left, 1)} - {to_text(e.right, 2)}"
        return f"({txt})" if _prec > 1 else txt
    if isinstance(e, Mul):
        txt = f"{to_text(e.left, 2)}*{to_text(e.right, 2)}"
        return f"({txt})" if _prec > 2 else txt
    if isinstance(e, Neg):
        txt = f"-{to_text(e.operand, 3)}"
        return f"({txt})" if _prec > 1 else txt
    if isinstance(e, Pow):
        txt = f"{to_text(e.base, 4)}^{e.exponent}"
        return f"({txt})" if _prec > 3 else txt
    raise TypeError(f"not a TrigExpr: {e!r}")


def evaluate_expr(e: TrigExpr, theta_degrees: float) -> float:
    """Direct floating evaluation at a concrete angle (degrees)."""
    if isinstance(e, Num):
        return float(e.value)
    if isinstance(e, AngleVar):
        return theta_degrees
    if isinstance(e, Trig):
        arg = math.radians(90.0 * e.quarter_turns + e.multiple * theta_degrees)
        return math.sin(arg) if e.fn == "sin" else math.cos(arg)
    if isinstance(e, Add):
        return evaluate_expr(e.left, theta_degrees) + evaluate_expr(e.right, theta_degrees)
    if isinstance(e, Sub):
        return evaluate_expr(e.left, theta_degrees) - evaluate_expr(e.right, theta_degrees)
    if isinstance(e, Mul):
        return evaluate_expr(e.left, theta_degrees) * evaluate_expr(e.right, theta_degrees)
    if isinstance(e, Neg):
        return -evaluate_expr(e.operand, theta_degrees)
    if isinstance(e, Pow):
        return evaluate_expr(e.base, theta_degrees) ** e.exponent
    raise TypeError(f"not a TrigExpr: {e!r}")


# ---------------------------------------------------------------------------
# Parser
# ---------------------------------------------------------------------------

@dataclass(frozen=True)
class _Token:
    kind: str   # INT IDENT OP EOF
    text: str
    pos: int


def _tokenize(text: str) -> Iterator[_Token]:
    i, n = 0, len(text)
    while i < n:
        ch = text[i]
        if ch.isspace():
            i += 1
            continue
        if ch.isdigit():
            j = i
            while j < n and text[j].isdigit():
                j += 1
            yield _Token("INT", text[i:j], i)
            i = j
        elif ch.isalpha():
            j = i
            while j < n and text[j].isalpha():
                j += 1
            yield _Token("IDENT", text[i:j], i)
            i = j
        elif ch in "+-*^()/":
            yield _Token("OP", ch, i)
            i += 1
        else:
            raise TrigParseError(f"unexpected character {ch!r}", i)
    yield _Token("EOF", "", n)


class _Parser:
    def __init__(self, text: str):
        self.tokens = list(_tokenize(text))
        self.i = 0

    def peek(self) -> _Token:
        return self.tokens[self.i]

    def next(self) -> _Token:
        tok = self.tokens[self.i]
        self.i += 1
        return tok

    def expect_op(self, op: str) -> _Token:
        tok = self.next()
        if tok.kind != "OP" or tok.text != op:
            raise TrigParseError(f"expected {op!r}, found {tok.text or 'end of input'!r}", tok.pos)
        return tok

    def parse(self) -> TrigExpr:
        e = self.expr()
        tok = self.peek()
        if tok.kind != "EOF":
            raise TrigParseError(f"unexpected trailing input {tok.text!r}", tok.pos)
        return e

    def expr(self) -> TrigExpr:
        e = self.term()
        while self.peek().kind == "OP" and self.peek().text in "+-":
            op = self.next().text
            rhs = self.term()
            e = Add(e, rhs) if op == "+" else Sub(e, rhs)
        return e

    def term(self) -> TrigExpr:
        e = self.unary()
        while self.peek().kind == "OP" and self.peek().text == "*":
            self.next()
            e = Mul(e, self.unary())
        return e

    def unary(self) -> TrigExpr:
        tok = self.peek()
        if tok.kind == "OP" and tok.text == "-":
            self.next()
            operand = self.unary()
            if isinstance(operand, Num):  # fold into a negative literal
                return Num(-operand.value)
            return Neg(operand)
        return self.power()

    def power(self) -> TrigExpr:
        base = self.atom()
        if self.peek().kind == "OP" and self.peek().text == "^":
            self.next()
            tok = self.next()
            if tok.kind != "INT":
                raise TrigParseError("exponent must be a nonnegative integer", tok.pos)
            return Pow(base, int(tok.text))
        return base

    def atom(self) -> TrigExpr:
        tok = self.next()
        if tok.kind == "INT":
            value = Fraction(int(tok.text))
            if self.peek().kind == "OP" and self.peek().text == "/":
                self.next()
                den = self.next()
                if den.kind != "INT":
                    raise TrigParseError("expected integer denominator", den.pos)
                if int(den.text) == 0:
                    raise TrigParseError("zero denominator", den.pos)
                value = Fraction(int(tok.text), int(den.text))
            return Num(value)
        if tok.kind == "IDENT":
            if tok.text == "t":
                return AngleVar()
            if tok.text in ("sin", "cos"):
                self.expect_op("(")
                k, m = self.linear_form(tok.pos)
                self.expect_op(")")
                return Trig(tok.text, k, m)
            raise TrigParseError(
                f"unknown name {tok.text!r}; only 't', 'sin' and 'cos' are supported", tok.pos
            )
        if tok.kind == "OP" and tok.text == "(":
            e = self.expr()
            self.expect_op(")")
            return e
        raise TrigParseError(f"unexpected token {tok.text or 'end of input'!r}", tok.pos)

    def linear_form(self, start: int) -> tuple[int, int]:
        """Parse ``k*90 +/- m*t`` inside a trig argument; returns (k, m)."""
        const = 0
        coeff = 0
        sign = 1
        tok = self.peek()
        if tok.kind == "OP" and tok.text in "+-":
            self.next()
            sign = -1 if tok.text == "-" else 1
        while True:
            tok = self.next()
            if tok.kind == "INT":
                value = int(tok.text)
                nxt = self.peek()
                if nxt.kind == "OP" and nxt.text == "*":
                    self.next()
                    nxt = self.next()
                    if nxt.kind != "IDENT" or nxt.text != "t":
                        raise TrigParseError(
                            "trig argument must be an integer-linear form in 't'", nxt.pos
                        )
                    coeff += sign * value
                elif nxt.kind == "IDENT":
                    self.next()
                    if nxt.text != "t":
                        raise TrigParseError(
                            f"second angle variable {nxt.text!r} unsupported", nxt.pos
                        )
                    coeff += sign * value
                else:
                    const += sign * value
            elif tok.kind == "IDENT":
                if tok.text != "t":
                    raise TrigParseError(f"second angle variable {tok.text!r} unsupported", tok.pos)
                coeff += sign
            else:
                raise TrigParseError(
                    "trig argument must be an integer-linear form in 't'", tok.pos
                )
            nxt = self.peek()
            if nxt.kind == "OP" and nxt.text in "+-":
                self.next()
                sign = -1 if nxt.text == "-" else 1
                continue
            break
        if const % 90 != 0:
            raise TrigParseError(
                f"trig argument constant {const} is not a multiple of 90 degrees", start
            )
        return const // 90, coeff


def parse_trig(text: str) -> TrigExpr:
    """Parse an expression; raises :class:`TrigParseError` with a position."""
    return _Parser(text).parse()


# ---------------------------------------------------------------------------
# Bivariate polynomial normal form
# ---------------------------------------------------------------------------

class BivarPoly:
    """Polynomial in s = sin t, c = cos t with rational coefficients.

    Monomials are keyed ``(i, j)`` for ``s^i c^j``; zero coefficients are
    never stored, so equality is literal coefficient-wise comparison.
    """

    __slots__ = ("coeffs",)

    def __init__(self, coeffs: Optional[dict[tuple[int, int], Fraction]] = None):
        clean = {}
        if coeffs:
            for key, value in coeffs.items():
                q = Fraction(value)
                if q != 0:
                    clean[key] = q
        self.coeffs = clean

    @classmethod
    def const(cls, q) -> "BivarPoly":
        return cls({(0, 0): Fraction(q)})

    @classmethod
    def s(cls) -> "BivarPoly":
        return cls({(1, 0): Fraction(1)})

    @classmethod
    def c(cls) -> "BivarPoly":
        return cls({(0, 1): Fraction(1)})

    def __add__(self, other: "BivarPoly") -> "BivarPoly":
        out = dict(self.coeffs)
        for key, q in other.coeffs.items():
            out[key] = out.get(key, Fraction(0)) + q
        return BivarPoly(out)

    def __neg__(self) -> "BivarPoly":
        return BivarPoly({k: -q for k, q in self.coeffs.items()})

    def __sub__(self, other: "BivarPoly") -> "BivarPoly":
        return self + (-other)

    def __mul__(self, other: "BivarPoly") -> "BivarPoly":
        out: dict[tuple[int, int], Fraction] = {}
        for (i1, j1), q1 in self.coeffs.items():
            for (i2, j2), q2 in other.coeffs.items():
                key = (i1 + i2, j1 + j2)
                out[key] = out.get(key, Fraction(0)) + q1 * q2
        return BivarPoly(out)

    def __pow__(self, n: int) -> "BivarPoly":
        if n < 0:
            raise ValueError("negative powers not supported")
        result = BivarPoly.const(1)
        base = self
        while n:
            if n & 1:
                result = result * base
            base = base * base
            n >>= 1
        return result

    def __eq__(self, other) -> bool:
        if not isinstance(other, BivarPoly):
            return NotImplemented
        return self.coeffs == other.coeffs

    def __hash__(self):
        return hash(frozenset(self.coeffs.items()))

    def is_zero(self) -> bool:
        return not self.coeffs

    def max_sin_power(self) -> int:
        return max((i for i, _ in self.coeffs), default=0)

    def evaluate(self, s_val: float, c_val: float) -> float:
        return float(sum(
            float(q) * s_val**i * c_val**j for (i, j), q in self.coeffs.items()
        ))

    def __str__(self) -> str:
        if not self.coeffs:
            return "0"
        def mono(i: int, j: int) -> str:
            parts = []
            if i:
                parts.append("s" if i == 1 else f"s^{i}")
            if j:
                parts.append("c" if j == 1 else f"c^{j}")
            return "*".join(parts)
        items = sorted(self.coeffs.items(), key=lambda kv: (-(kv[0][0] + kv[0][1]), -kv[0][0], -kv[0][1]))
        chunks = []
        for (i, j), q in items:
            m = mono(i, j)
            mag = abs(q)
            body = m if (mag == 1 and m) else (f"{mag}*{m}" if m else str(mag))
            if not chunks:
                chunks.append(body if q > 0 else f"-{body}")
            else:
                chunks.append(f"+ {body}" if q > 0 else f"- {body}")
        return " ".join(chunks)

    def __repr__(self) -> str:
        return f"BivarPoly({self.coeffs!r})"


# ---------------------------------------------------------------------------
# Normalization
# ---------------------------------------------------------------------------

# sin(90k + x) and cos(90k + x) in terms of sin x / cos x, by k mod 4
_SHIFT_SIN = {0: ("sin", 1), 1: ("cos", 1), 2: ("sin", -1), 3: ("cos", -1)}
_SHIFT_COS = {0: ("cos", 1), 1: ("sin", -1), 2: ("cos", -1), 3: ("sin", 1)}


def _multiple_angle(fn: str, n: int, rules: RuleSet, fired: set) -> BivarPoly:
    if n == 0:
        return BivarPoly.const(0) if fn == "sin" else BivarPoly.const(1)
    if n == 1:
        return BivarPoly.s() if fn == "sin" else BivarPoly.c()
    if fn == "cos":
        if n == 2 and rules.double_cos_paper:
            fired.add("double_cos_paper")
            return BivarPoly.const(2) * BivarPoly.c() ** 2 - BivarPoly.const(1)
        if rules.angle_sum:
            fired.add("angle_sum")
            prev_c = _multiple_angle("cos", n - 1, rules, fired)
            prev_s = _multiple_angle("sin", n - 1, rules, fired)
            return prev_c * BivarPoly.c() - prev_s * BivarPoly.s()
        if n % 2 == 0 and rules.double_cos_paper:
            fired.add("double_cos_paper")
            half = _multiple_angle("cos", n // 2, rules, fired)
            return BivarPoly.const(2) * half * half - BivarPoly.const(1)
    else:
        if n == 2 and rules.double_sin:
            fired.add("double_sin")
            return BivarPoly.const(2) * BivarPoly.s() * BivarPoly.c()
        if rules.angle_sum:
            fired.add("angle_sum")
            prev_s = _multiple_angle("sin", n - 1, rules, fired)
            prev_c = _multiple_angle("cos", n - 1, rules, fired)
            return prev_s * BivarPoly.c() + prev_c * BivarPoly.s()
        if n % 2 == 0 and rules.double_sin:
            fired.add("double_sin")
            half_s = _multiple_angle("sin", n // 2, rules, fired)
            half_c = _multiple_angle("cos", n // 2, rules, fired)
            return BivarPoly.const(2) * half_s * half_c
    raise CannotNormalizeError(
        f"{fn}({n}*t) cannot be reduced: enable angle_sum or the double-angle rules"
    )


def _trig_to_poly(node: Trig, rules: RuleSet, fired: set) -> BivarPoly:
    fn, k, m = node.fn, node.quarter_turns, node.multiple
    sign = 1
    if k % 4 != 0 or m < 0:
        if not rules.angle_shift:
            raise CannotNormalizeError(
                f"{fn}({_linear_text(k, m)}) has a shifted argument: enable angle_shift"
            )
        fired.add("angle_shift")
        table = _SHIFT_SIN if fn == "sin" else _SHIFT_COS
        fn, shift_sign = table[k % 4]
        sign *= shift_sign
        if m < 0:  # parity: sin odd, cos even
            m = -m
            if fn == "sin":
                sign = -sign
    poly = _multiple_angle(fn, m, rules, fired)
    return poly if sign == 1 else -poly


def _reduce_pythagorean(poly: BivarPoly, fired: set) -> BivarPoly:
    if poly.max_sin_power() < 2:
        return poly
    fired.add("pythagorean")
    one_minus_c2 = BivarPoly.const(1) - BivarPoly.c() ** 2
    out = BivarPoly.const(0)
    for (i, j), q in poly.coeffs.items():
        term = BivarPoly({(i % 2, j): q}) * one_minus_c2 ** (i // 2)
        out = out + term
    return out


def _to_poly(e: TrigExpr, rules: RuleSet, fired: set) -> BivarPoly:
    if isinstance(e, Num):
        return BivarPoly.const(e.value)
    if isinstance(e, AngleVar):
        raise CannotNormalizeError("the bare angle variable has no polynomial normal form")
    if isinstance(e, Trig):
        return _trig_to_poly(e, rules, fired)
    if isinstance(e, Add):
        return _to_poly(e.left, rules, fired) + _to_poly(e.right, rules, fired)
    if isinstance(e, Sub):
        return _to_poly(e.left, rules, fired) - _to_poly(e.right, rules, fired)
    if isinstance(e, Mul):
        return _to_poly(e.left, rules, fired) * _to_poly(e.right, rules, fired)
    if isinstance(e, Neg):
        return -_to_poly(e.operand, rules, fired)
    if isinstance(e, Pow):
        return _to_poly(e.base, rules, fired) ** e.exponent
    raise TypeError(f"not a TrigExpr: {e!r}")


def normalize_traced(e: TrigExpr, rules: RuleSet) -> tuple[BivarPoly, frozenset]:
    fired: set = set()
    poly = _to_poly(e, rules, fired)
    if rules.pythagorean:
        poly = _reduce_pythagorean(poly, fired)
    return poly, frozenset(fired)


def normalize(e: TrigExpr, rules: RuleSet = RuleSet()) -> BivarPoly:
    """Fixed point of the enabled rewrite rules, expanded and collected."""
    poly, _ = normalize_traced(e, rules)
    return poly


# ---------------------------------------------------------------------------
# Prover
# ---------------------------------------------------------------------------

@dataclass(frozen=True)
class ProofReport:
    proved: bool
    rules_used: tuple[str, ...]
    lhs_normal: BivarPoly
    rhs_normal: BivarPoly
    lhs_text: str = ""
    rhs_text: str = ""

    def to_dict(self) -> dict:
        return {
            "proved": self.proved,
            "rules_used": list(self.rules_used),
            "lhs": self.lhs_text,
            "rhs": self.rhs_text,
            "lhs_normal": str(self.lhs_normal),
            "rhs_normal": str(self.rhs_normal),
        }


def prove_identity(lhs: TrigExpr, rhs: TrigExpr, rules: RuleSet = RuleSet()) -> ProofReport:
    """Decide lhs = rhs by normal-form comparison under the enabled rules."""
    lp, lf = normalize_traced(lhs, rules)
    rp, rf = normalize_traced(rhs, rules)
    fired = sorted(lf | rf, key=RULE_NAMES.index)
    return ProofReport(
        proved=(lp == rp),
        rules_used=tuple(fired),
        lhs_normal=lp,
        rhs_normal=rp,
        lhs_text=to_text(lhs),
        rhs_text=to_text(rhs),
    )


def prove_identity_text(identity: str, rules: RuleSet = RuleSet()) -> ProofReport:
    """Parse ``"LHS = RHS"`` and prove it."""
    if identity.count("=") != 1:
        raise TrigParseError("identity must contain exactly one '='", identity.find("="))
    lhs_text, rhs_text = identity.split("=")
    lhs = parse_trig(lhs_text)
    try:
        rhs = parse_trig(rhs_text)
    except TrigParseError as exc:
        raise TrigParseError(str(exc).rsplit(" (at position", 1)[0],
                             exc.position + len(lhs_text) + 1) from None
    return prove_identity(lhs, rhs, rules)


def verify_double_angle_relation(theta_degrees: float, tol: float = 1e-12) -> bool:
    """Check sin(t)*(1 + cos(2t)) = sin(2t)*cos(t) at a concrete angle.

    This is the proportion behind the similar-triangle picture that yields
    cos(2t) = 2 cos^2(t) - 1 without the Pythagorean identity, stated
    multiplied out to avoid division.
    """
    t = math.radians(theta_degrees)
    lhs = math.sin(t) * (1.0 + math.cos(2 * t))
    rhs = math.sin(2 * t) * math.cos(t)
    return scalar_eq(lhs, rhs, scale=1.0, tol=tol)
