"""Exponential Taylor series: expansions in powers of e^{lambda (x - x0)} - 1."""

from ._exptaylor import (
    ConvergenceReport,
    DiagnosticError,
    DomainError,
    Expansion1D,
    ExpansionND,
    Expr,
    GrowthReport,
    IdentityResult,
    OperatorSequence,
    ParseError,
    RegionError,
    RemainderEstimate,
    ValidationError,
    cosine_series,
    d_lambda,
    epsilon_inverse,
    epsilon_sup,
    eval_nd,
    eval_series,
    expand_1d,
    expand_nd,
    growth_diagnostic,
    lift,
    linear_series,
    log_series,
    parse,
    radius_estimate,
    remainder_bound,
    remainder_bound_nd,
    remainder_integral,
    run_suite,
    stirling_log2_series,
    stirling_row,
    suite_json,
)

__all__ = [name for name in dir() if not name.startswith("_")]
__version__ = "0.1.0"
