"""Exact zeta polynomials of weight enumerators and unit-circle verification."""

from .algebra import (
    QuadExt,
    TruncatedSeries,
    UniPoly,
    half_power,
    is_self_reciprocal,
    reciprocal_transform,
    series_expand,
    sign_exact,
)
from .enumerators import (
    CodeParams,
    WeightEnumerator,
    golay_enumerator,
    golay_pair,
    hamming_enumerator,
    invariantize,
    is_invariant,
    macwilliams_transform,
    mds_enumerator,
    min_distance,
    simplex_enumerator,
)
from .rh import (
    LiftMatrix,
    RHVerdict,
    SignScanResult,
    ek_criterion,
    monotone_coefficient_check,
    normalize_zeta,
    numeric_roots,
    palindrome_lift,
    palindrome_pullback,
    sign_scan,
    sign_scan_at,
    verify_rh,
)
from .zeta import (
    NormalizedEnumerator,
    ZetaPolynomial,
    dual_zeta,
    functional_equation_check,
    hamming_invariant_zeta_closed,
    invariant_zeta,
    mds_invariant_zeta,
    normalized_enumerator,
    simplex_zeta_closed,
    zeta_by_linear_system,
    zeta_from_enumerator,
)

__version__ = "0.1.0"

__all__ = [
    "QuadExt",
    "UniPoly",
    "TruncatedSeries",
    "half_power",
    "sign_exact",
    "series_expand",
    "reciprocal_transform",
    "is_self_reciprocal",
    "CodeParams",
    "WeightEnumerator",
    "macwilliams_transform",
    "is_invariant",
    "invariantize",
    "min_distance",
    "mds_enumerator",
    "simplex_enumerator",
    "hamming_enumerator",
    "golay_enumerator",
    "golay_pair",
    "ZetaPolynomial",
    "NormalizedEnumerator",
    "normalized_enumerator",
    "zeta_from_enumerator",
    "zeta_by_linear_system",
    "dual_zeta",
    "invariant_zeta",
    "mds_invariant_zeta",
    "simplex_zeta_closed",
    "hamming_invariant_zeta_closed",
    "functional_equation_check",
    "normalize_zeta",
    "ek_criterion",
    "monotone_coefficient_check",
    "numeric_roots",
    "palindrome_lift",
    "palindrome_pullback",
    "LiftMatrix",
    "sign_scan",
    "sign_scan_at",
    "SignScanResult",
    "verify_rh",
    "RHVerdict",
]
