"""Convex-analysis machinery and a desk-scale verifier for tail limits of
log-moment generating functions under one-sided-derivative hypotheses."""

from .convex import (
    DEFAULT_TOL,
    ConvexFn,
    PointCase,
    Tolerances,
    classify_point,
    eval_many,
    fn_eval,
    from_oracle,
    improper_shape,
    is_proper_on_nonneg,
    lambda_tilde,
    left_deriv,
    pwl,
    right_deriv,
    right_deriv_limit,
    right_limit_value,
    zero_diagnostics,
)
from .extreal import NEG_INF, POS_INF, ext_add, ext_mul, lambda_slope_product
from .families import bernoulli_mean, builtin_families, gaussian_mean, point_mass
from .generator import (
    AtomicMeasure,
    MeasureSequence,
    SeedSpec,
    appendix_sequence,
    build_lf,
    build_measure,
    conjugate_atoms_sequence,
    enumerate_dense,
    interval_log_prob,
    log_mgf,
)
from .harness import (
    CurveReport,
    Scenario,
    VerificationReport,
    corollary_curve,
    gate_diagnostics,
    l0_estimate,
    ps_limit_target,
    solve_t_z,
    verify_theorem,
)
from .legendre import ConjugateFn, biconjugate_check, conjugate, conjugate_at

__version__ = "0.1.0"

__all__ = [
    "AtomicMeasure",
    "ConjugateFn",
    "ConvexFn",
    "CurveReport",
    "DEFAULT_TOL",
    "MeasureSequence",
    "NEG_INF",
    "POS_INF",
    "PointCase",
    "Scenario",
    "SeedSpec",
    "Tolerances",
    "VerificationReport",
    "appendix_sequence",
    "bernoulli_mean",
    "biconjugate_check",
    "build_lf",
    "build_measure",
    "builtin_families",
    "classify_point",
    "conjugate",
    "conjugate_at",
    "conjugate_atoms_sequence",
    "corollary_curve",
    "enumerate_dense",
    "eval_many",
    "ext_add",
    "ext_mul",
    "fn_eval",
    "from_oracle",
    "gate_diagnostics",
    "gaussian_mean",
    "improper_shape",
    "interval_log_prob",
    "is_proper_on_nonneg",
    "l0_estimate",
    "lambda_slope_product",
    "lambda_tilde",
    "left_deriv",
    "log_mgf",
    "point_mass",
    "ps_limit_target",
    "pwl",
    "right_deriv",
    "right_deriv_limit",
    "right_limit_value",
    "solve_t_z",
    "verify_theorem",
    "zero_diagnostics",
]
