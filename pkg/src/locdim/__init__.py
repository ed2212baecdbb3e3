"""Bounds on local dimensions of overlapping equicontractive
self-similar measures: analytic isolated-point bounds, coverage-based
upper and conditional lower bounds, transition-point sweeps, and
Pisot/Salem certification."""

from .algebraic import Certificate, Classification, IntPolynomial, certify_rho, classify
from .analytic import (
    GOLDEN,
    AnalyticBound,
    BoundMethod,
    biased_corollary_bound,
    dim_at_zero,
    erdos_k,
    erdos_upper_bound,
    xi_biased_upper_bound,
)
from .coverage import (
    BoundResult,
    CoverageProfile,
    WeightedInterval,
    admissible_interval,
    best_lower_bound,
    coverage_profile,
    enumerate_images,
    lower_bound,
    min_coverage,
    pointwise_N,
    sup_coverage,
    upper_bound,
)
from .expansions import (
    Expansion,
    choose_xi_lazy,
    choose_xi_lmr,
    lazy_expansion,
    lmr_expansion,
    nonzero_density,
)
from .ifs import (
    IFSSpec,
    Interval,
    IsolatedPointReport,
    SpecError,
    Word,
    build_bernoulli,
    build_convolution,
    isolated_point_report,
    map_interval,
    map_point,
    spec_from_json,
    strict_overlap,
    unbiased_overlap,
    validate,
    word_from_string,
    word_weight,
)
from .kernels import BACKEND
from .transitions import (
    BernoulliFamily,
    ConstancyError,
    TransitionPolynomial,
    TransitionSet,
    constancy_sweep,
    isolate_roots,
    lower_bound_over_range,
    transition_polynomials,
    transition_set,
)

__version__ = "0.1.0"

__all__ = [
    "AnalyticBound", "BACKEND", "BernoulliFamily", "BoundMethod", "BoundResult",
    "Certificate", "Classification", "ConstancyError", "CoverageProfile",
    "Expansion", "GOLDEN", "IFSSpec", "IntPolynomial", "Interval",
    "IsolatedPointReport", "SpecError", "TransitionPolynomial", "TransitionSet",
    "WeightedInterval", "Word", "admissible_interval", "best_lower_bound",
    "biased_corollary_bound", "build_bernoulli", "build_convolution",
    "certify_rho", "choose_xi_lazy", "choose_xi_lmr", "classify",
    "constancy_sweep", "coverage_profile", "dim_at_zero", "enumerate_images",
    "erdos_k", "erdos_upper_bound", "isolate_roots", "isolated_point_report",
    "lazy_expansion", "lmr_expansion", "lower_bound", "lower_bound_over_range",
    "map_interval", "map_point", "min_coverage", "nonzero_density",
    "pointwise_N", "spec_from_json", "strict_overlap", "sup_coverage",
    "transition_polynomials", "transition_set", "unbiased_overlap",
    "upper_bound", "validate", "word_from_string", "word_weight",
    "xi_biased_upper_bound",
]
