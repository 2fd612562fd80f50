"""Weighted cumulative residual and past extropy.

Analytic measures for parametric distributions under simple random and
extreme-ranked sampling designs, seeded simulation of those designs,
empirical estimators, and numeric verification of the ordering and
monotonicity theorems that relate them.
"""

from .distributions import (
    EXP_MINUS_ONE,
    IDENTITY,
    TRANSFORMATIONS,
    Distribution,
    Transformation,
    custom,
    exponential,
    parse_distribution,
    pdf_at_quantile,
    power_survival,
    quantile,
    transform,
    uniform,
)
from .errors import (
    BandwidthError,
    DivergenceError,
    DomainError,
    ExtropyError,
    InsufficientDataError,
    IntegrandError,
    InvalidTransformationError,
    ParseError,
    WeightValidityError,
)
from .estimators import (
    EstimatorConfig,
    bandwidth_silverman,
    estimate,
    kernel_estimate,
    smoothed_cdf,
    step_estimate,
)
from .measures import (
    MAX_RSSU,
    MIN_RSSU,
    PAST,
    PLAIN,
    RESIDUAL,
    SINGLE,
    SRS,
    IntegrandKind,
    MeasureReport,
    MeasureSpec,
    closed_form,
    gw_cumulative,
    gw_design_measure,
    gwj,
    make_integrand,
    measure_report,
)
from .orders import (
    THEOREM_IDS,
    HypothesisCheck,
    Lemma1Report,
    OrderVerdict,
    TheoremCase,
    TheoremReport,
    check_lemma1,
    check_order,
    default_suite,
    run_theorem_suite,
)
from .quadrature import (
    IntegrationResult,
    gamma_beta,
    integrate_interval,
    integrate_unit_interval,
)
from .sampling import Sample, derive_seed, draw_design, replicate
from .weights import (
    WeightFunction,
    check_monotone_weight,
    constant_weight,
    custom_weight,
    eval_weight,
    exp_decay_weight,
    parse_weight,
    power_weight,
)

__version__ = "0.1.0"

__all__ = [
    "BandwidthError",
    "Distribution",
    "DivergenceError",
    "DomainError",
    "EXP_MINUS_ONE",
    "EstimatorConfig",
    "ExtropyError",
    "HypothesisCheck",
    "IDENTITY",
    "InsufficientDataError",
    "IntegrandError",
    "IntegrandKind",
    "IntegrationResult",
    "InvalidTransformationError",
    "Lemma1Report",
    "MAX_RSSU",
    "MIN_RSSU",
    "MeasureReport",
    "MeasureSpec",
    "OrderVerdict",
    "PAST",
    "PLAIN",
    "ParseError",
    "RESIDUAL",
    "SINGLE",
    "SRS",
    "Sample",
    "THEOREM_IDS",
    "TRANSFORMATIONS",
    "TheoremCase",
    "TheoremReport",
    "Transformation",
    "WeightFunction",
    "WeightValidityError",
    "bandwidth_silverman",
    "check_lemma1",
    "check_monotone_weight",
    "check_order",
    "closed_form",
    "constant_weight",
    "custom",
    "custom_weight",
    "default_suite",
    "derive_seed",
    "draw_design",
    "estimate",
    "eval_weight",
    "exp_decay_weight",
    "exponential",
    "gamma_beta",
    "gw_cumulative",
    "gw_design_measure",
    "gwj",
    "integrate_interval",
    "integrate_unit_interval",
    "kernel_estimate",
    "make_integrand",
    "measure_report",
    "parse_distribution",
    "parse_weight",
    "pdf_at_quantile",
    "power_survival",
    "power_weight",
    "quantile",
    "replicate",
    "run_theorem_suite",
    "smoothed_cdf",
    "step_estimate",
    "transform",
    "uniform",
    "__version__",
]
