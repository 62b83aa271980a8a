"""Exact Casson-Walker invariants of cyclic covering-space pairs.

Thin wrapper over the compiled core; see the project README for the
underlying C++ library and the cwpair command-line tool.
"""

from cwpair._core import (
    CoverSlope,
    DivisorEntry,
    DomainError,
    GeomFlags,
    KnotRecord,
    LambdaPairResult,
    PairDescription,
    ParseError,
    Rational,
    SlopeClaim,
    SlopeKind,
    SlopeReport,
    SlopeViolation,
    Slope,
    SymPoly,
    alexander_from_seifert,
    builtin_catalog,
    check_slope_bounds,
    companion_alexander,
    cover_slope,
    cyclotomic_lift,
    dedekind_paper,
    dedekind_standard,
    distance,
    divisor_family,
    find_knot,
    lambda_cover_surgery,
    lambda_pair,
    lambda_replication,
    lambda_surgery_s3,
    lift_paper_eq10,
    load_catalog,
    sawtooth,
    unit_equivalent,
)

__all__ = [
    "CoverSlope",
    "DivisorEntry",
    "DomainError",
    "GeomFlags",
    "KnotRecord",
    "LambdaPairResult",
    "PairDescription",
    "ParseError",
    "Rational",
    "SlopeClaim",
    "SlopeKind",
    "SlopeReport",
    "SlopeViolation",
    "Slope",
    "SymPoly",
    "alexander_from_seifert",
    "builtin_catalog",
    "check_slope_bounds",
    "companion_alexander",
    "cover_slope",
    "cyclotomic_lift",
    "dedekind_paper",
    "dedekind_standard",
    "distance",
    "divisor_family",
    "find_knot",
    "lambda_cover_surgery",
    "lambda_pair",
    "lambda_replication",
    "lambda_surgery_s3",
    "lift_paper_eq10",
    "load_catalog",
    "sawtooth",
    "unit_equivalent",
]

__version__ = "0.1.0"
