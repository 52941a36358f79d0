"""zigpyr: verification workbench for parametric ziggurat and pyramid
area-rearrangement configurations over right triangles."""

__version__ = "0.1.0"

from .numeric import (  # noqa: F401
    AREA_RTOL,
    COINCIDENCE_RTOL,
    GOLDEN_RATIO,
    ExactValueUnavailable,
    MixedBackendError,
    MixedFieldError,
    QuadExt,
    Rational,
    Scalar,
    SpecialAngle,
    scalar_eq,
    scalar_sign,
    scalar_sqrt,
    special_angle_lookup,
)
