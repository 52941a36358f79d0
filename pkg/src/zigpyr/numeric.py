"""Exact and floating scalar arithmetic shared by every other module.

Two backends coexist:

* exact -- elements of a quadratic extension Q(sqrt(d)) with arbitrary
  precision rational coefficients (:class:`QuadExt`), where equality is
  decidable with no tolerance;
* float -- plain Python floats, compared through an explicit relative
  tolerance against a declared scale (:func:`scalar_eq`).

A ``Scalar`` is simply a value of either backend; geometric code is written
generically against the arithmetic operators both provide.
"""

from __future__ import annotations

import math
from dataclasses import dataclass
from fractions import Fraction
from typing import Optional, Union

Rational = Fraction

# Relative tolerances for the float backend (exact backend never uses them).
AREA_RTOL = 1e-9          # area identities
COINCIDENCE_RTOL = 1e-12  # point/vector coincidence, lengths


class MixedFieldError(ValueError):
    """Raised when combining elements of Q(sqrt(d1)) and Q(sqrt(d2)), d1 != d2."""


class MixedBackendError(TypeError):
    """Raised when an operation mixes exact and float scalars."""


class ExactValueUnavailable(ValueError):
    """Raised when a value has no representation in a single Q(sqrt(d))."""


def _is_square_free(n: int) -> bool:
    if n < 1:
        return False
    k = 2
    while k * k <= n:
        if n % (k * k) == 0:
            return False
        k += 1
    return True


def _fraction_sqrt(q: Fraction) -> Optional[Fraction]:
    """Exact square root of a nonnegative rational, or None."""
    if q < 0:
        return None
    num, den = q.numerator, q.denominator
    rn, rd = math.isqrt(num), math.isqrt(den)
    if rn * rn == num and rd * rd == den:
        return Fraction(rn, rd)
    return None


class QuadExt:
    """An element a + b*sqrt(d) of the quadratic extension Q(sqrt(d)).

    ``d`` is a square-free positive integer fixed per arithmetic context;
    ``d == 1`` denotes the rational field itself (then ``b == 0`` after
    normalization).  Elements whose irrational part is zero embed in any
    field and may combine with elements of a different ``d``; combining two
    genuinely irrational elements of distinct fields raises
    :class:`MixedFieldError`.
    """

    __slots__ = ("a", "b", "d")

    def __init__(self, a, b=0, d: int = 1):
        a = Fraction(a)
        b = Fraction(b)
        d = int(d)
        if not _is_square_free(d):
            raise ValueError(f"d must be a square-free positive integer, got {d}")
        if d == 1:
            a, b = a + b, Fraction(0)
        object.__setattr__(self, "a", a)
        object.__setattr__(self, "b", b)
        object.__setattr__(self, "d", d)

    def __setattr__(self, name, value):  # immutable after construction
        raise AttributeError("QuadExt is immutable")

    # -- coercion ---------------------------------------------------------

    @property
    def is_rational(self) -> bool:
        return self.b == 0

    def _align(self, other) -> tuple["QuadExt", "QuadExt"]:
        if isinstance(other, (int, Fraction)):
            other = QuadExt(other, 0, 1)
        elif isinstance(other, float):
            raise MixedBackendError("cannot mix float with exact QuadExt arithmetic")
        elif not isinstance(other, QuadExt):
            return NotImplemented, NotImplemented  # type: ignore[return-value]
        if self.d == other.d:
            return self, other
        if self.is_rational:
            return QuadExt(self.a, 0, other.d), other
        if other.is_rational:
            return self, QuadExt(other.a, 0, self.d)
        raise MixedFieldError(f"cannot combine Q(sqrt({self.d})) with Q(sqrt({other.d}))")

    # -- field operations --------------------------------------------------

    def __add__(self, other):
        x, y = self._align(other)
        if x is NotImplemented:
            return NotImplemented
        return QuadExt(x.a + y.a, x.b + y.b, x.d)

    __radd__ = __add__

    def __neg__(self):
        return QuadExt(-self.a, -self.b, self.d)

    def __sub__(self, other):
        x, y = self._align(other)
        if x is NotImplemented:
            return NotImplemented
        return QuadExt(x.a - y.a, x.b - y.b, x.d)

    def __rsub__(self, other):
        return (-self) + other

    def __mul__(self, other):
        x, y = self._align(other)
        if x is NotImplemented:
            return NotImplemented
        return QuadExt(x.a * y.a + x.b * y.b * x.d, x.a * y.b + x.b * y.a, x.d)

    __rmul__ = __mul__

    def inverse(self) -> "QuadExt":
        norm = self.a * self.a - self.b * self.b * self.d
        if norm == 0:
            raise ZeroDivisionError("division by zero in Q(sqrt(d))")
        return QuadExt(self.a / norm, -self.b / norm, self.d)

    def __truediv__(self, other):
        x, y = self._align(other)
        if x is NotImplemented:
            return NotImplemented
        return x * y.inverse()

    def __rtruediv__(self, other):
        return self.inverse() * other

    def __pow__(self, n: int):
        if not isinstance(n, int):
            return NotImplemented
        if n < 0:
            return self.inverse() ** (-n)
        result = QuadExt(1, 0, self.d)
        base = self
        while n:
            if n & 1:
                result = result * base
            base = base * base
            n >>= 1
        return result

    # -- comparisons & predicates ------------------------------------------

    def __eq__(self, other) -> bool:
        if isinstance(other, (int, Fraction)):
            return self.b == 0 and self.a == other
        if isinstance(other, QuadExt):
            if self.d == other.d:
                return self.a == other.a and self.b == other.b
            return self.is_rational and other.is_rational and self.a == other.a
        return NotImplemented

    def __hash__(self):
        if self.b == 0:
            return hash(self.a)
        return hash((self.a, self.b, self.d))

    def sign(self) -> int:
        """Exact sign of a + b*sqrt(d): -1, 0 or 1."""
        a, b = self.a, self.b
        if b == 0:
            return (a > 0) - (a < 0)
        if a == 0:
            return 1 if b > 0 else -1
        if a > 0 and b > 0:
            return 1
        if a < 0 and b < 0:
            return -1
        # opposite signs: compare a^2 against b^2 d
        lhs, rhs = a * a, b * b * self.d
        if lhs == rhs:
            return 0
        bigger_abs_is_a = lhs > rhs
        return (1 if a > 0 else -1) if bigger_abs_is_a else (1 if b > 0 else -1)

    def __lt__(self, other):
        x, y = self._align(other)
        return (x - y).sign() < 0

    def __le__(self, other):
        x, y = self._align(other)
        return (x - y).sign() <= 0

    def __gt__(self, other):
        x, y = self._align(other)
        return (x - y).sign() > 0

    def __ge__(self, other):
        x, y = self._align(other)
        return (x - y).sign() >= 0

    def __abs__(self):
        return -self if self.sign() < 0 else self

    # -- conversions ---------------------------------------------------------

    def __float__(self) -> float:
        return float(self.a) + float(self.b) * math.sqrt(self.d)

    def to_fraction(self) -> Fraction:
        if self.b != 0:
            raise ExactValueUnavailable(f"{self} is irrational")
        return self.a

    def sqrt(self) -> "QuadExt":
        """Exact square root within Q(sqrt(d)), if one exists.

        Solves (p + q*sqrt(d))^2 = self over the rationals; raises
        :class:`ExactValueUnavailable` when no such element exists.
        """
        if self.sign() < 0:
            raise ExactValueUnavailable(f"{self} is negative")
        if self.b == 0:
            r = _fraction_sqrt(self.a)
            if r is not None:
                return QuadExt(r, 0, self.d)
            if self.d > 1:
                r = _fraction_sqrt(self.a / self.d)
                if r is not None:
                    return QuadExt(0, r, self.d)
        else:
            # p^2 = (a +/- sqrt(a^2 - b^2 d)) / 2, q = b / (2p)
            norm = self.a * self.a - self.b * self.b * self.d
            rn = _fraction_sqrt(norm)
            if rn is not None:
                for p2 in ((self.a + rn) / 2, (self.a - rn) / 2):
                    p = _fraction_sqrt(p2)
                    if p is not None and p != 0:
                        q = self.b / (2 * p)
                        cand = QuadExt(p, q, self.d)
                        if cand.sign() < 0:
                            cand = -cand
                        if cand * cand == self:
                            return cand
        raise ExactValueUnavailable(f"no exact square root of {self} in Q(sqrt({self.d}))")

    # -- formatting ----------------------------------------------------------

    def __str__(self) -> str:
        if self.b == 0:
            return str(self.a)
        root = f"√{self.d}"
        b = self.b
        btxt = root if abs(b) == 1 else f"{abs(b)}{root}"
        if self.a == 0:
            return btxt if b > 0 else f"-{btxt}"
        sign = "+" if b > 0 else "-"
        return f"{self.a} {sign} {btxt}"

    def __repr__(self) -> str:
        return f"QuadExt({self.a!r}, {self.b!r}, {self.d})"


Scalar = Union[float, QuadExt]


def is_exact(x: Scalar) -> bool:
    return isinstance(x, (QuadExt, int, Fraction))


def as_float(x: Scalar) -> float:
    return float(x)


def scalar_eq(x: Scalar, y: Scalar, scale: Scalar = 1, tol: float = COINCIDENCE_RTOL) -> bool:
    """Backend-aware equality.

    Exact backend: decidable, tolerance-free.  Float backend: relative
    comparison ``|x - y| <= tol * max(|scale|, 1)``.  Mixing backends is an
    error rather than a silent precision loss.
    """
    ex, ey = is_exact(x), is_exact(y)
    if ex != ey:
        raise MixedBackendError("scalar_eq operands use different backends")
    if ex:
        return _as_quad(x) == _as_quad(y)
    return abs(x - y) <= tol * max(abs(as_float(scale)), 1.0)


def scalar_sign(x: Scalar, scale: Scalar = 1, tol: float = COINCIDENCE_RTOL) -> int:
    """Sign with a tolerance-guarded zero band in the float backend."""
    if is_exact(x):
        return _as_quad(x).sign()
    if abs(x) <= tol * max(abs(as_float(scale)), 1.0):
        return 0
    return 1 if x > 0 else -1


def scalar_sqrt(x: Scalar) -> Scalar:
    if is_exact(x):
        return _as_quad(x).sqrt()
    if x < 0:
        raise ValueError(f"sqrt of negative float {x}")
    return math.sqrt(x)


def _as_quad(x) -> QuadExt:
    if isinstance(x, QuadExt):
        return x
    return QuadExt(Fraction(x), 0, 1)


# ---------------------------------------------------------------------------
# Special angles
# ---------------------------------------------------------------------------

@dataclass(frozen=True)
class SpecialAngle:
    """An angle with exact cosine/sine where a single Q(sqrt(d)) can hold them.

    ``cos_exact``/``sin_exact`` are absent when the value would need a nested
    radical (e.g. sin 72 and sin 108); the float fields are always populated.
    """

    degrees: Fraction
    cos_exact: Optional[QuadExt]
    sin_exact: Optional[QuadExt]
    cos_value: float
    sin_value: float

    @property
    def has_exact_pair(self) -> bool:
        return self.cos_exact is not None and self.sin_exact is not None


def _q(a, b=0, d=1) -> QuadExt:
    return QuadExt(Fraction(a), Fraction(b), d)


_HALF = Fraction(1, 2)
_QUARTER = Fraction(1, 4)

# cos 36 = phi/2, sin 18 = 1/(2 phi); sines at 18/36/72/108/144 need nested
# radicals and are deliberately absent.
_SPECIAL_TABLE: dict[Fraction, tuple[Optional[QuadExt], Optional[QuadExt]]] = {
    Fraction(0): (_q(1), _q(0)),
    Fraction(18): (None, _q(-_QUARTER, _QUARTER, 5)),
    Fraction(30): (_q(0, _HALF, 3), _q(_HALF)),
    Fraction(36): (_q(_QUARTER, _QUARTER, 5), None),
    Fraction(45): (_q(0, _HALF, 2), _q(0, _HALF, 2)),
    Fraction(60): (_q(_HALF), _q(0, _HALF, 3)),
    Fraction(72): (_q(-_QUARTER, _QUARTER, 5), None),
    Fraction(90): (_q(0), _q(1)),
    Fraction(108): (_q(_QUARTER, -_QUARTER, 5), None),
    Fraction(120): (_q(-_HALF), _q(0, _HALF, 3)),
    Fraction(135): (_q(0, -_HALF, 2), _q(0, _HALF, 2)),
    Fraction(144): (_q(-_QUARTER, -_QUARTER, 5), None),
    Fraction(150): (_q(0, -_HALF, 3), _q(_HALF)),
    Fraction(180): (_q(-1), _q(0)),
}


def special_angle_lookup(degrees) -> SpecialAngle:
    """Table entry for ``degrees``; exact fields absent when unrepresentable."""
    deg = Fraction(degrees)
    rad = math.radians(float(deg))
    cos_e, sin_e = _SPECIAL_TABLE.get(deg, (None, None))
    return SpecialAngle(
        degrees=deg,
        cos_exact=cos_e,
        sin_exact=sin_e,
        cos_value=math.cos(rad),
        sin_value=math.sin(rad),
    )


GOLDEN_RATIO = _q(_HALF, _HALF, 5)  # (1 + sqrt 5) / 2


def exact_sincos(degrees) -> tuple[QuadExt, QuadExt]:
    """Exact (sin, cos) pair for angles where both live in one Q(sqrt(d)).

    Raises :class:`ExactValueUnavailable` otherwise (e.g. 72 and 108, whose
    sines need nested radicals).
    """
    entry = special_angle_lookup(degrees)
    if not entry.has_exact_pair:
        raise ExactValueUnavailable(
            f"no exact sin/cos pair for {degrees} degrees in a single quadratic field"
        )
    sin_e, cos_e = entry.sin_exact, entry.cos_exact
    assert sin_e is not None and cos_e is not None
    if sin_e.d != cos_e.d and not (sin_e.is_rational or cos_e.is_rational):
        raise ExactValueUnavailable(f"sin/cos of {degrees} live in distinct fields")
    return sin_e, cos_e
