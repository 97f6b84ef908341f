"""Exact non-vanishing criteria for archimedean theta lifts of U(p, q)."""
from .core import (
    ComponentChar,
    HalfInt,
    HCParam,
    ParameterError,
    TempParam,
    ThetaContext,
    UnitaryChar,
    build_param,
    conjugate_dual,
    shifted_exponents,
)
from .llc import Signature, hc_to_param, param_to_hc, signature
from .ggp import conjecture_signs, is_relevant_pair, restriction_distinguished
from .theta import (
    ParityError,
    conservation_report,
    dual_context,
    first_occurrence,
    invariants,
    nonvanishing,
)

__all__ = [
    "ComponentChar",
    "HalfInt",
    "HCParam",
    "ParameterError",
    "ParityError",
    "Signature",
    "TempParam",
    "ThetaContext",
    "UnitaryChar",
    "build_param",
    "conjugate_dual",
    "conjecture_signs",
    "conservation_report",
    "dual_context",
    "first_occurrence",
    "hc_to_param",
    "invariants",
    "is_relevant_pair",
    "nonvanishing",
    "param_to_hc",
    "restriction_distinguished",
    "shifted_exponents",
    "signature",
]
