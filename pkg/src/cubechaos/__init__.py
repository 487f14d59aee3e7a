"""Exact symbolic dynamics of the shift on recursively subdivided unit cubes."""

from .coding import (
    DEFAULT_MAX_ORDER,
    CapacityError,
    Code,
    DomainError,
    InsufficientDepthError,
    SubCubeBox,
    axes_to_digit,
    decode_code,
    diameter_squared,
    digit_to_axes,
    encode_point,
    subcube_bounds,
    subcube_distance_squared,
)
from .shift import (
    OrbitRecord,
    ScrambledPair,
    SensitivityWitness,
    dense_code,
    liyorke_pair,
    orbit,
    periodic_approximant,
    periodic_code,
    recurrence_stats,
    sensitivity_witness,
    shift,
)
from .tent import check_semiconjugacy, code_interval, itinerary, tent_eval
from .verifiers import (
    VerificationReport,
    verify_diagonal,
    verify_liyorke,
    verify_periodic_density,
    verify_separation,
    verify_transitivity,
)

__version__ = "0.1.0"

__all__ = [
    "DEFAULT_MAX_ORDER",
    "CapacityError",
    "Code",
    "DomainError",
    "InsufficientDepthError",
    "SubCubeBox",
    "axes_to_digit",
    "decode_code",
    "diameter_squared",
    "digit_to_axes",
    "encode_point",
    "subcube_bounds",
    "subcube_distance_squared",
    "OrbitRecord",
    "ScrambledPair",
    "SensitivityWitness",
    "dense_code",
    "liyorke_pair",
    "orbit",
    "periodic_approximant",
    "periodic_code",
    "recurrence_stats",
    "sensitivity_witness",
    "shift",
    "check_semiconjugacy",
    "code_interval",
    "itinerary",
    "tent_eval",
    "VerificationReport",
    "verify_diagonal",
    "verify_liyorke",
    "verify_periodic_density",
    "verify_separation",
    "verify_transitivity",
]
