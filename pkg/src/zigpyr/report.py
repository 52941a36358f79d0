"""Wire format shared by the CLI JSON output and the HTTP service.

Floats are serialized at 15 significant digits and keys are sorted, so
identical inputs produce bitwise-identical JSON bodies on every surface.
"""

from __future__ import annotations

import json
from fractions import Fraction
from typing import Any

from .constructions import RightTriangle, build_configuration
from .numeric import ExactValueUnavailable
from .verification import compute_constants, run_verification


def round15(x: float) -> float:
    """Round a float through 15 significant digits."""
    return float(f"{x:.15g}")


def jsonable(value: Any) -> Any:
    """Recursively convert to JSON-ready values with normalized floats."""
    if isinstance(value, float):
        return round15(value)
    if isinstance(value, dict):
        return {str(k): jsonable(v) for k, v in value.items()}
    if isinstance(value, (list, tuple)):
        return [jsonable(v) for v in value]
    return value


def dumps_stable(obj: Any) -> str:
    return json.dumps(jsonable(obj), sort_keys=True)


def parse_quantity(text: str) -> Fraction:
    """Parse a decimal or rational string ("135", "77.3", "540/4") exactly."""
    return Fraction(str(text).strip())


def build_config_response(a, b, theta_degrees, family: str,
                          exact_mode: bool = False) -> dict:
    """The full configuration document in wire form.

    With ``exact_mode`` the document is built on the exact backend when the
    angle admits an exact sin/cos pair (falling back to floats otherwise,
    e.g. at 108 degrees) and the zero-tolerance special-angle identity
    record is required rather than optional.
    """
    tri = RightTriangle(a, b)
    if exact_mode:
        try:
            doc = build_configuration(tri, theta_degrees, family, exact=True)
        except ExactValueUnavailable:
            doc = build_configuration(tri, float(theta_degrees), family, exact=False)
        report = run_verification(doc, include_exact=True)
    else:
        doc = build_configuration(tri, float(theta_degrees), family, exact=False)
        report = run_verification(doc, include_exact="auto")
    constants = compute_constants(float(theta_degrees))
    return {
        "named_points": {
            name: list(p.as_floats()) for name, p in doc.named_points.items()
        },
        "polygons": {name: list(cycle) for name, cycle in doc.polygons.items()},
        "areas": doc.areas(),
        "degeneracy": doc.degeneracy.as_dict(),
        "verification": report.to_dict(),
        "constants": constants.as_dict(),
    }
