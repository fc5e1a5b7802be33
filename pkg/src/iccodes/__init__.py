"""Irreducible cyclic codes C(r,N): exhaustive weight distributions,
Gaussian periods, period polynomials, and closed-form cross-checks."""

from .gf import ZERO, DEFAULT_FIELD_CAP, FieldCapError, FieldError, FieldTable, build_field
from .cyclotomy import (GaussianPeriodSet, PeriodPolynomial, TraceCountMatrix,
                        class_of, compute_period_polynomial, gaussian_periods,
                        period_polynomial, trace_count_matrix)
from .codes import (CodeSpec, WeightDistribution, brute_weight_distribution,
                    build_code, codeword, count_Z, weight_from_Z, weight_from_period)
from .analytic import (AnalyticError, DiophantineParams, PredictedEnumerator,
                       PredictedPsi, TheoremCase, classify, predicted_enumerator,
                       predicted_period_polynomial, solve_quadratic_form)

__all__ = [
    "ZERO", "DEFAULT_FIELD_CAP", "FieldCapError", "FieldError", "FieldTable",
    "build_field", "GaussianPeriodSet", "PeriodPolynomial", "TraceCountMatrix",
    "class_of", "compute_period_polynomial", "gaussian_periods",
    "period_polynomial", "trace_count_matrix", "CodeSpec", "WeightDistribution",
    "brute_weight_distribution", "build_code", "codeword", "count_Z",
    "weight_from_Z", "weight_from_period", "AnalyticError", "DiophantineParams",
    "PredictedEnumerator", "PredictedPsi", "TheoremCase", "classify",
    "predicted_enumerator", "predicted_period_polynomial", "solve_quadratic_form",
]

__version__ = "0.1.0"
