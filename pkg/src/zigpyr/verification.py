"""Audits of every quantitative claim about the configurations.

Each check compares kernel-measured quantities (shoelace areas, distances,
vectors) against the closed-form claims.  Checks are pure functions over an
immutable document; :func:`run_verification` executes the full fixed list
for a family exactly once and assembles a report.

Statuses:

* ``pass`` / ``fail`` -- the claim holds / does not hold at the tolerance;
* ``degenerate-skip`` -- the parameter lies outside the claim's range
  (e.g. theorem additivity below 60 degrees, where ziggurats self-intersect);
* ``discrepancy`` -- the kernel contradicts one printed formula while the
  corrected form passes; used by the central-parallelogram audit, which
  arbitrates between the ``sin(270 - theta)`` and ``sin(270 - 2 theta)``
  area candidates.
"""

from __future__ import annotations

import math
from dataclasses import dataclass
from fractions import Fraction
from typing import Optional

from .constructions import (
    DOUBLE_ANGLE,
    PYRAMID,
    ZIGGURAT,
    ConfigurationDocument,
    DegeneracyRecord,
    RightTriangle,
    build_pyramid,
    build_regular_polygon,
    build_ziggurat,
    classify_degeneracy,  # noqa: F401  (re-exported audit surface)
)
from .geometry import Point, Polygon, distance, polygon_self_intersects, signed_area
from .numeric import (
    AREA_RTOL,
    COINCIDENCE_RTOL,
    GOLDEN_RATIO,
    ExactValueUnavailable,
    QuadExt,
    Scalar,
    is_exact,
    scalar_sign,
    special_angle_lookup,
)

PASS = "pass"
FAIL = "fail"
SKIP = "degenerate-skip"
DISCREPANCY = "discrepancy"

ZIGGURAT_THEOREM_RANGE = (60.0, 135.0)
PYRAMID_THEOREM_RANGE = (45.0, 90.0)

EXACT_ZIGGURAT_ANGLES = (60, 90, 108, 120, 135)
EXACT_PYRAMID_ANGLES = (45, 60, 72)


@dataclass(frozen=True)
class CheckRecord:
    name: str
    claim: str
    status: str
    measured: dict
    tolerance: Optional[float]

    def to_dict(self) -> dict:
        return {
            "name": self.name,
            "claim": self.claim,
            "status": self.status,
            "measured": dict(self.measured),
            "tolerance": self.tolerance,
        }


@dataclass(frozen=True)
class ConstantsRecord:
    """Dimensionless constants of the configuration at one angle.

    ``C_theta``: ziggurat area over basis squared, sin(t)(1 - cos(t)).
    ``similarity_ratio``: central-triangle scale factor 1 - 2 cos(t).
    ``r_theta``: pyramid leg over basis, 1/(2 cos t), for t < 90.
    ``D_theta``: extended-pyramid area over ziggurat area for t > 90,
    measured from the kernel; equals -1/(4 cos(t) (1 - cos(t))).
    """

    theta_degrees: float
    C_theta: float
    similarity_ratio: float
    r_theta: Optional[float]
    D_theta: Optional[float]

    def as_dict(self) -> dict:
        return {
            "theta_degrees": self.theta_degrees,
            "C_theta": self.C_theta,
            "similarity_ratio": self.similarity_ratio,
            "r_theta": self.r_theta,
            "D_theta": self.D_theta,
        }


@dataclass(frozen=True)
class VerificationReport:
    family: str
    a: float
    b: float
    theta_degrees: float
    exact: bool
    records: tuple[CheckRecord, ...]

    @property
    def passed(self) -> bool:
        return all(r.status != FAIL for r in self.records)

    def record(self, name: str) -> CheckRecord:
        for r in self.records:
            if r.name == name:
                return r
        raise KeyError(name)

    def to_dict(self) -> dict:
        return {
            "family": self.family,
            "inputs": {"a": self.a, "b": self.b, "theta_degrees": self.theta_degrees},
            "exact": self.exact,
            "passed": self.passed,
            "checks": [r.to_dict() for r in self.records],
        }

    def to_text(self) -> str:
        width = max((len(r.name) for r in self.records), default=4)
        lines = [
            f"family={self.family} a={self.a:g} b={self.b:g} "
            f"theta={self.theta_degrees:g} exact={self.exact}",
            f"{'check'.ljust(width)}  {'status'.ljust(15)}  detail",
            "-" * (width + 60),
        ]
        for r in self.records:
            detail = ", ".join(
                f"{k}={v:.6g}" if isinstance(v, float) else f"{k}={v}"
                for k, v in r.measured.items()
            )
            lines.append(f"{r.name.ljust(width)}  {r.status.ljust(15)}  {detail}")
        lines.append(f"overall: {'PASS' if self.passed else 'FAIL'}")
        return "\n".join(lines)


# ---------------------------------------------------------------------------
# Backend-generic helpers
# ---------------------------------------------------------------------------

def _fmt(value: Scalar):
    """Measured value for a report: float, or string of an exact value."""
    if isinstance(value, QuadExt):
        return str(value)
    return float(value)


def _residual_ok(lhs: Scalar, rhs: Scalar, scale: float, tol: float, exact: bool) -> bool:
    if exact:
        return scalar_sign(lhs - rhs, tol=0.0) == 0
    return abs(float(lhs) - float(rhs)) <= tol * max(abs(scale), 1.0)


def _doc_sincos(doc: ConfigurationDocument) -> tuple[Scalar, Scalar]:
    if doc.exact:
        from .numeric import exact_sincos
        return exact_sincos(Fraction(doc.theta_degrees))
    rad = math.radians(doc.theta_degrees)
    return math.sin(rad), math.cos(rad)


def _scalars(doc: ConfigurationDocument) -> tuple[Scalar, Scalar, Scalar, Scalar]:
    """(a, b, s, c) in the document's backend.

    Exact documents are always in the canonical pose, so the legs can be
    read off the axis-aligned coordinates without square roots.
    """
    s, c = _doc_sincos(doc)
    if doc.exact:
        a_len = abs(doc.point("B").y - doc.point("C").y)
        b_len = abs(doc.point("A").x - doc.point("C").x)
    else:
        a_len, b_len = doc.a, doc.b
    return a_len, b_len, s, c


def _one(exact: bool):
    return QuadExt(1) if exact else 1.0


# ---------------------------------------------------------------------------
# Individual checks
# ---------------------------------------------------------------------------

def check_area_additivity(doc: ConfigurationDocument) -> CheckRecord:
    """Sum of piece areas over the legs equals the piece area over the
    hypotenuse, inside the family's stated angle range."""
    if doc.family == ZIGGURAT:
        lo, hi = ZIGGURAT_THEOREM_RANGE
        names = ("ziggurat_a", "ziggurat_b", "ziggurat_c")
        claim = "area(ziggurat_c) == area(ziggurat_a) + area(ziggurat_b)"
        in_range = lo <= doc.theta_degrees <= hi
    elif doc.family == PYRAMID:
        lo, hi = PYRAMID_THEOREM_RANGE
        names = ("pyramid_a", "pyramid_b", "pyramid_c")
        claim = "area(pyramid_c) == area(pyramid_a) + area(pyramid_b)"
        in_range = lo <= doc.theta_degrees < hi
    else:
        raise ValueError(f"additivity check needs a ziggurat or pyramid document, got {doc.family}")
    area_a = doc.polygon_area(names[0])
    area_b = doc.polygon_area(names[1])
    area_c = doc.polygon_area(names[2])
    measured = {
        "area_a": _fmt(area_a), "area_b": _fmt(area_b), "area_c": _fmt(area_c),
        "residual": _fmt(abs(area_c - (area_a + area_b))) if not doc.exact
        else str(area_c - (area_a + area_b)),
    }
    tol = 0.0 if doc.exact else AREA_RTOL
    if not in_range:
        return CheckRecord("theorem_additivity", claim, SKIP, measured, tol)
    ok = _residual_ok(area_c, area_a + area_b, float(area_c), AREA_RTOL, doc.exact)
    return CheckRecord("theorem_additivity", claim, PASS if ok else FAIL, measured, tol)


def check_lemma_parallelograms(doc: ConfigurationDocument) -> CheckRecord:
    """Vector identities D''-F == D'-C' and E''-G == E'-C' (the side
    quadrilaterals are parallelograms, degenerating to segments at 90)."""
    c_len = math.hypot(doc.a, doc.b)
    cp = doc.point("C'")
    res = 0.0
    for tip, corner, top in (("D''", "F", "D'"), ("E''", "G", "E'")):
        lhs = doc.point(tip) - doc.point(corner)
        rhs = doc.point(top) - cp
        res = max(res, abs(float(lhs.x) - float(rhs.x)), abs(float(lhs.y) - float(rhs.y)))
    tol = 0.0 if doc.exact else COINCIDENCE_RTOL
    ok = res <= COINCIDENCE_RTOL * c_len if not doc.exact else res == 0.0
    return CheckRecord(
        "lemma_parallelograms",
        "D''-F == D'-C' and E''-G == E'-C' (vector equality)",
        PASS if ok else FAIL,
        {"max_component_residual": res, "scale": c_len},
        tol,
    )


def check_rotated_copy(doc: ConfigurationDocument) -> CheckRecord:
    """Triangle D''FA is a rotated copy of ABC: congruent side lengths."""
    sides = sorted([
        distance(doc.point("D''"), doc.point("F")),
        distance(doc.point("F"), doc.point("A")),
        distance(doc.point("A"), doc.point("D''")),
    ])
    expected = sorted([doc.a, doc.b, math.hypot(doc.a, doc.b)])
    res = max(abs(s - e) / max(e, 1e-300) for s, e in zip(sides, expected))
    ok = res <= COINCIDENCE_RTOL * 10
    return CheckRecord(
        "rotated_copy_congruence",
        "triangle D''FA has side lengths {a, b, c}",
        PASS if ok else FAIL,
        {"max_relative_residual": res},
        COINCIDENCE_RTOL,
    )


def check_similarity_ratio(doc: ConfigurationDocument) -> CheckRecord:
    """|F - G| / |A - B| equals |1 - 2 cos theta| for every theta."""
    ratio = distance(doc.point("F"), doc.point("G")) / math.hypot(doc.a, doc.b)
    expected = abs(1 - 2 * math.cos(math.radians(doc.theta_degrees)))
    res = abs(ratio - expected)
    ok = res <= COINCIDENCE_RTOL * max(1.0, expected) * 10
    return CheckRecord(
        "similarity_ratio",
        "|F-G| / |A-B| == |1 - 2 cos(theta)|",
        PASS if ok else FAIL,
        {"ratio": ratio, "expected": expected},
        COINCIDENCE_RTOL,
    )


def check_pyramid_similarity(doc: ConfigurationDocument) -> CheckRecord:
    """|B'-C'| = r a and |A'-C'| = r b with r = 1/(2 cos theta)."""
    r = 1.0 / (2.0 * math.cos(math.radians(doc.theta_degrees)))
    got_a = distance(doc.point("B'"), doc.point("C'"))
    got_b = distance(doc.point("A'"), doc.point("C'"))
    res = max(abs(got_a - r * doc.a) / (r * doc.a), abs(got_b - r * doc.b) / (r * doc.b))
    ok = res <= COINCIDENCE_RTOL * 10
    return CheckRecord(
        "pyramid_similarity",
        "|B'-C'| == r*a and |A'-C'| == r*b, r = 1/(2 cos theta)",
        PASS if ok else FAIL,
        {"r": r, "max_relative_residual": res},
        COINCIDENCE_RTOL,
    )


def check_parallelogram_closure(doc: ConfigurationDocument) -> CheckRecord:
    """CA'C'B' is a parallelogram: A' + B' == C + C' componentwise."""
    lhs = doc.point("A'") + doc.point("B'")
    rhs = doc.point("C") + doc.point("C'")
    res = max(abs(float(lhs.x) - float(rhs.x)), abs(float(lhs.y) - float(rhs.y)))
    scale = doc.coordinate_scale()
    ok = res == 0.0 if doc.exact else res <= COINCIDENCE_RTOL * max(scale, 1.0)
    return CheckRecord(
        "parallelogram_closure",
        "A' + B' == C + C' (CA'C'B' closes as a parallelogram)",
        PASS if ok else FAIL,
        {"max_component_residual": res},
        0.0 if doc.exact else COINCIDENCE_RTOL,
    )


def _master_is_simple(doc: ConfigurationDocument) -> bool:
    return not polygon_self_intersects(doc.polygon("master"))


def audit_hypotenuse_decomposition(doc: ConfigurationDocument) -> CheckRecord:
    """Master polygon = hypotenuse ziggurat + two congruent corner triangles
    + the similar central triangle: area(P) = area(zig_c) +
    (2 + (1-2cos t)^2) * area(ABC)."""
    claim = "area(master) == area(ziggurat_c) + (2 + (1-2cos t)^2) * area(ABC)"
    a_len, b_len, s, c = _scalars(doc)
    one = _one(doc.exact)
    ratio = one - 2 * c if doc.exact else 1.0 - 2.0 * c
    tri = doc.polygon_area("triangle")
    formula = doc.polygon_area("ziggurat_c") + (2 * one + ratio * ratio) * tri
    master = doc.polygon_area("master")
    measured = {
        "master": _fmt(master),
        "formula": _fmt(formula),
        "corner_a": _fmt(doc.polygon_area("corner_triangle_a")),
        "corner_b": _fmt(doc.polygon_area("corner_triangle_b")),
        "central_triangle": _fmt(doc.polygon_area("central_triangle")),
    }
    tol = 0.0 if doc.exact else AREA_RTOL
    if not _master_is_simple(doc):
        return CheckRecord("decomposition_hypotenuse", claim, SKIP, measured, tol)
    scale = float(master)
    ok = (
        _residual_ok(master, formula, scale, AREA_RTOL, doc.exact)
        and _residual_ok(doc.polygon_area("corner_triangle_a"), tri, scale, AREA_RTOL, doc.exact)
        and _residual_ok(doc.polygon_area("corner_triangle_b"), tri, scale, AREA_RTOL, doc.exact)
        and _residual_ok(doc.polygon_area("central_triangle"),
                         ratio * ratio * tri if doc.exact else ratio**2 * tri,
                         scale, AREA_RTOL, doc.exact)
    )
    return CheckRecord("decomposition_hypotenuse", claim, PASS if ok else FAIL, measured, tol)


def _shifted_sines(doc: ConfigurationDocument) -> tuple[Scalar, Scalar]:
    """(sin(270 - t), sin(270 - 2t)) in the document backend."""
    if doc.exact:
        s, c = _doc_sincos(doc)
        return -c, -(2 * c * c - 1)
    t = doc.theta_degrees
    return (math.sin(math.radians(270.0 - t)),
            math.sin(math.radians(270.0 - 2.0 * t)))


def audit_legs_decomposition(doc: ConfigurationDocument) -> CheckRecord:
    """Master polygon = leg ziggurats + triangle + three parallelograms:
    area(P) = area(zig_a) + area(zig_b) +
    (1 + 4(1-2cos t) sin(270-t) + 2 sin(270-2t)) * area(ABC).  The side
    parallelograms are individually audited against
    ab (1-2cos t) |sin(270-t)|."""
    claim = ("area(master) == area(ziggurat_a) + area(ziggurat_b) + "
             "(1 + 4(1-2cos t) sin(270-t) + 2 sin(270-2t)) * area(ABC)")
    a_len, b_len, s, c = _scalars(doc)
    one = _one(doc.exact)
    ratio = one - 2 * c
    sh1, sh2 = _shifted_sines(doc)
    tri = doc.polygon_area("triangle")
    multiplier = one + 4 * ratio * sh1 + 2 * sh2
    formula = doc.polygon_area("ziggurat_a") + doc.polygon_area("ziggurat_b") + multiplier * tri
    master = doc.polygon_area("master")
    side_expected = a_len * b_len * ratio * sh1
    side_expected = abs(side_expected) if doc.exact else abs(float(side_expected))
    measured = {
        "master": _fmt(master),
        "formula": _fmt(formula),
        "side_parallelogram_a": _fmt(doc.polygon_area("side_parallelogram_a")),
        "side_parallelogram_b": _fmt(doc.polygon_area("side_parallelogram_b")),
        "side_parallelogram_expected": _fmt(side_expected),
    }
    tol = 0.0 if doc.exact else AREA_RTOL
    if not _master_is_simple(doc):
        return CheckRecord("decomposition_legs", claim, SKIP, measured, tol)
    scale = float(master)
    ok = (
        _residual_ok(master, formula, scale, AREA_RTOL, doc.exact)
        and _residual_ok(doc.polygon_area("side_parallelogram_a"), side_expected,
                         scale, AREA_RTOL, doc.exact)
        and _residual_ok(doc.polygon_area("side_parallelogram_b"), side_expected,
                         scale, AREA_RTOL, doc.exact)
    )
    return CheckRecord("decomposition_legs", claim, PASS if ok else FAIL, measured, tol)


def audit_central_parallelogram_formula(doc: ConfigurationDocument) -> CheckRecord:
    """Arbitrate the central-parallelogram area between the two printed
    candidates ab|sin(270 - t)| and ab|sin(270 - 2t)|.

    The kernel decides: ``pass`` when both match (they coincide at 120),
    ``discrepancy`` when only the 270 - 2t form matches (e.g. 100 and 135),
    ``fail`` if the 270 - 2t form itself is off."""
    claim = "area(E'C'D'C): ab*|sin(270-t)| (printed) vs ab*|sin(270-2t)| (summation)"
    a_len, b_len, s, c = _scalars(doc)
    sh1, sh2 = _shifted_sines(doc)
    measured_area = doc.polygon_area("central_parallelogram")
    ab = a_len * b_len
    cand_printed = abs(ab * sh1) if doc.exact else abs(float(ab) * float(sh1))
    cand_summation = abs(ab * sh2) if doc.exact else abs(float(ab) * float(sh2))
    scale = float(ab)
    match_printed = _residual_ok(measured_area, cand_printed, scale, AREA_RTOL, doc.exact)
    match_summation = _residual_ok(measured_area, cand_summation, scale, AREA_RTOL, doc.exact)
    if match_summation and match_printed:
        status = PASS
    elif match_summation:
        status = DISCREPANCY
    else:
        status = FAIL
    return CheckRecord(
        "central_parallelogram_formula",
        claim,
        status,
        {
            "measured": _fmt(measured_area),
            "candidate_printed": _fmt(cand_printed),
            "candidate_summation": _fmt(cand_summation),
        },
        0.0 if doc.exact else AREA_RTOL,
    )


def audit_pyramid_decompositions(doc: ConfigurationDocument) -> CheckRecord:
    """Both expressions for the pyramid master polygon ABA'C'B':
    pyramids over the legs + ab(1/2 - r^2 cos 2t), and the hypotenuse
    pyramid + r^2 ab."""
    claim = ("area(master) == area(pyr_a) + area(pyr_b) + ab(1/2 - r^2 cos 2t) "
             "== area(pyr_c) + r^2 ab")
    a_len, b_len, s, c = _scalars(doc)
    one = _one(doc.exact)
    ab = a_len * b_len
    if doc.exact:
        r = one / (2 * c)
        cos2t = 2 * c * c - 1
        half = QuadExt(Fraction(1, 2))
    else:
        r = 1.0 / (2.0 * c)
        cos2t = math.cos(math.radians(2 * doc.theta_degrees))
        half = 0.5
    expr1 = (doc.polygon_area("pyramid_a") + doc.polygon_area("pyramid_b")
             + ab * (half - r * r * cos2t))
    expr2 = doc.polygon_area("pyramid_c") + r * r * ab
    master = doc.polygon_area("master")
    measured = {
        "master": _fmt(master),
        "legs_viewpoint": _fmt(expr1),
        "hypotenuse_viewpoint": _fmt(expr2),
    }
    tol = 0.0 if doc.exact else AREA_RTOL
    lo, hi = PYRAMID_THEOREM_RANGE
    if not (lo <= doc.theta_degrees < hi):
        return CheckRecord("decomposition_master", claim, SKIP, measured, tol)
    scale = float(master)
    ok = (_residual_ok(master, expr1, scale, AREA_RTOL, doc.exact)
          and _residual_ok(master, expr2, scale, AREA_RTOL, doc.exact))
    return CheckRecord("decomposition_master", claim, PASS if ok else FAIL, measured, tol)


def check_pyramid_scalar_identity(doc: ConfigurationDocument) -> CheckRecord:
    """1/2 - r^2 cos(2t) == r^2 with r = 1/(2 cos t) -- multiply by 4 cos^2 t
    and it is the double-cosine identity."""
    t = math.radians(doc.theta_degrees)
    r = 1.0 / (2.0 * math.cos(t))
    lhs = 0.5 - r * r * math.cos(2 * t)
    rhs = r * r
    ok = abs(lhs - rhs) <= COINCIDENCE_RTOL * max(abs(rhs), 1.0) * 10
    return CheckRecord(
        "pyramid_scalar_identity",
        "1/2 - r^2 cos(2t) == r^2",
        PASS if ok else FAIL,
        {"lhs": lhs, "rhs": rhs},
        COINCIDENCE_RTOL,
    )


def check_exact_special_angle(theta_degrees, family: str = ZIGGURAT) -> CheckRecord:
    """Zero-tolerance identity check in the quadratic field of cos(theta).

    Ziggurat angles: the multiplier identity
    ``1 + 4(1-2c)(-c) + 2(-(2c^2-1)) == 2 + (1-2c)^2`` at the exact cosine;
    at 135 both sides equal 5 + 2*sqrt(2), at 108 the equality reduces to
    the golden-ratio relation phi^2 = 1 + phi.  Pyramid angles: the
    decomposition coincidence ``1/2 - r^2 (2c^2-1) == r^2`` with r = 1/(2c);
    at 72 the leg ratio r is exactly phi.
    """
    deg = Fraction(theta_degrees)
    entry = special_angle_lookup(deg)
    if entry.cos_exact is None:
        raise ExactValueUnavailable(f"no exact cosine for {theta_degrees} degrees")
    c = entry.cos_exact
    one = QuadExt(1)
    if family == ZIGGURAT:
        if int(deg) not in EXACT_ZIGGURAT_ANGLES:
            raise ValueError(f"exact ziggurat angles are {EXACT_ZIGGURAT_ANGLES}")
        ratio = one - 2 * c
        lhs = one + 4 * ratio * (-c) + 2 * (-(2 * c * c - one))
        rhs = 2 * one + ratio * ratio
        measured = {"lhs": str(lhs), "rhs": str(rhs), "cos_theta": str(c)}
        if int(deg) == 108:
            phi = GOLDEN_RATIO
            measured["phi_squared"] = str(phi * phi)
            measured["one_plus_phi"] = str(one + phi)
            measured["golden_relation_holds"] = str(phi * phi == one + phi)
        ok = lhs == rhs
        claim = "1 + 4(1-2c)(-c) + 2(-(2c^2-1)) == 2 + (1-2c)^2 exactly"
    elif family == PYRAMID:
        if int(deg) not in EXACT_PYRAMID_ANGLES:
            raise ValueError(f"exact pyramid angles are {EXACT_PYRAMID_ANGLES}")
        r = one / (2 * c)
        lhs = QuadExt(Fraction(1, 2)) - r * r * (2 * c * c - one)
        rhs = r * r
        measured = {"lhs": str(lhs), "rhs": str(rhs), "r": str(r)}
        if int(deg) == 72:
            measured["r_is_golden_ratio"] = str(r == GOLDEN_RATIO)
        ok = lhs == rhs
        claim = "1/2 - r^2 (2c^2-1) == r^2 exactly, r = 1/(2c)"
    else:
        raise ValueError(f"unknown family {family!r}")
    return CheckRecord("exact_special_angle", claim, PASS if ok else FAIL, measured, 0.0)


def check_regular_polygon_additivity(tri: RightTriangle, n: int,
                                     exact: bool = False) -> CheckRecord:
    """Regular n-gons erected on the three sides have additive areas."""
    a_pt, b_pt, c_pt = tri.points(exact)
    gon_a = build_regular_polygon(n, c_pt, b_pt, "right", exact)
    gon_b = build_regular_polygon(n, a_pt, c_pt, "right", exact)
    gon_c = build_regular_polygon(n, b_pt, a_pt, "right", exact)
    areas = [abs(float(signed_area(g))) for g in (gon_a, gon_b, gon_c)]
    residual = abs(areas[2] - areas[0] - areas[1])
    ok = residual <= AREA_RTOL * max(areas[2], 1.0)
    return CheckRecord(
        f"regular_polygon_additivity_n{n}",
        "n-gon areas over a and b sum to the n-gon area over c",
        PASS if ok else FAIL,
        {"area_a": areas[0], "area_b": areas[1], "area_c": areas[2], "residual": residual},
        AREA_RTOL,
    )


def compute_constants(theta_degrees, exact: bool = False) -> ConstantsRecord:
    """Kernel-measured configuration constants at one angle."""
    theta = float(theta_degrees)
    if not 0 < theta < 180:
        raise ValueError("theta must lie strictly between 0 and 180 degrees")
    p, q = Point(0.0, 0.0), Point(1.0, 0.0)
    zig = build_ziggurat(p, q, theta)
    c_theta = float(zig.area())
    cos_t = math.cos(math.radians(theta))
    similarity = 1.0 - 2.0 * cos_t
    r_theta = 1.0 / (2.0 * cos_t) if theta < 90 else None
    d_theta = None
    if theta > 90:
        extended = build_pyramid(p, q, 180.0 - theta)
        d_theta = float(extended.area()) / c_theta
    return ConstantsRecord(
        theta_degrees=theta,
        C_theta=c_theta,
        similarity_ratio=similarity,
        r_theta=r_theta,
        D_theta=d_theta,
    )


# ---------------------------------------------------------------------------
# Report assembly
# ---------------------------------------------------------------------------

def exact_identity_supported(theta_degrees: float, family: str) -> bool:
    table = EXACT_ZIGGURAT_ANGLES if family == ZIGGURAT else EXACT_PYRAMID_ANGLES
    return any(theta_degrees == float(v) for v in table)


def run_verification(doc: ConfigurationDocument,
                     include_exact: str | bool = "auto") -> VerificationReport:
    """Run every check for the document's family exactly once.

    ``include_exact``: ``"auto"`` adds the zero-tolerance special-angle
    record when the angle supports one; ``True`` requires it (raises
    otherwise); ``False`` never adds it.
    """
    if doc.family == ZIGGURAT:
        records = [
            check_area_additivity(doc),
            check_lemma_parallelograms(doc),
            check_rotated_copy(doc),
            check_similarity_ratio(doc),
            audit_hypotenuse_decomposition(doc),
            audit_legs_decomposition(doc),
            audit_central_parallelogram_formula(doc),
        ]
    elif doc.family == PYRAMID:
        records = [
            check_area_additivity(doc),
            check_parallelogram_closure(doc),
            check_pyramid_similarity(doc),
            audit_pyramid_decompositions(doc),
            check_pyramid_scalar_identity(doc),
        ]
    else:
        raise ValueError(f"cannot verify family {doc.family!r}")
    wants_exact = include_exact is True or (
        include_exact == "auto" and exact_identity_supported(doc.theta_degrees, doc.family)
    )
    if wants_exact:
        records.append(check_exact_special_angle(Fraction(doc.theta_degrees), doc.family))
    return VerificationReport(
        family=doc.family,
        a=doc.a,
        b=doc.b,
        theta_degrees=doc.theta_degrees,
        exact=doc.exact,
        records=tuple(records),
    )
