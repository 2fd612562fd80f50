"""Analytic evaluation of weighted extropy measures.

All measures are u-space integrals against the quantile function Q and the
density-at-quantile f(Q(u)):

* weighted extropy of the density itself: -1/2 * E[w(Q(U)) f(Q(U))]
* cumulative past variant:     -1/2 * E[Lambda],  Lambda = u^2 w(Q)/f(Q)
* cumulative residual variant: -1/2 * E[Delta],   Delta = (1-u)^2 w(Q)/f(Q)

Sampling designs replace the single expectation by powers or products:
SRS raises the expectation to the design size n, maxRSSU (past) multiplies
E[Psi_i] with Psi_i = u^{2i} w/f over i = 1..n, and minRSSU (residual)
multiplies E[Phi_i] with Phi_i = (1-u)^{2i} w/f. A registry of closed forms
for the uniform, exponential, and power-survival families with power weights
serves as an independent oracle; quadrature is always the computed path.
"""

from __future__ import annotations

import math
from dataclasses import dataclass
from typing import Callable

from .distributions import EXPONENTIAL, POWER_SURVIVAL, UNIFORM, Distribution
from .errors import DivergenceError, DomainError
from .quadrature import IntegrationResult, gamma_beta, integrate_unit_interval
from .weights import POWER, WeightFunction, eval_weight

PAST = "past"
RESIDUAL = "residual"
PLAIN = "plain_extropy_weighted"

SINGLE = "single"
SRS = "SRS"
MIN_RSSU = "minRSSU"
MAX_RSSU = "maxRSSU"

VARIANTS = (PAST, RESIDUAL, PLAIN)
DESIGNS = (SINGLE, SRS, MIN_RSSU, MAX_RSSU)

LAMBDA = "Lambda"
DELTA = "Delta"
PSI_I = "Psi_i"
PHI_I = "Phi_i"
DELTA_GWJ = "delta_gwj"

_INDEXED_KINDS = (PSI_I, PHI_I)
_KINDS = (LAMBDA, DELTA, PSI_I, PHI_I, DELTA_GWJ)


@dataclass(frozen=True)
class MeasureSpec:
    """Which measure to evaluate: variant, sampling design, design size."""

    variant: str
    design: str = SINGLE
    n: int = 1

    def __post_init__(self):
        if self.variant not in VARIANTS:
            raise DomainError(f"unknown variant {self.variant!r}")
        if self.design not in DESIGNS:
            raise DomainError(f"unknown design {self.design!r}")
        if not (isinstance(self.n, int) and self.n >= 1):
            raise DomainError(f"design size must be a positive integer, got {self.n!r}")
        if self.design == SINGLE and self.n != 1:
            raise DomainError("design 'single' requires n = 1")
        if self.variant == PAST and self.design == MIN_RSSU:
            raise DomainError("the past variant is defined for maxRSSU, not minRSSU")
        if self.variant == RESIDUAL and self.design == MAX_RSSU:
            raise DomainError("the residual variant is defined for minRSSU, not maxRSSU")
        if self.variant == PLAIN and self.design != SINGLE:
            raise DomainError("the plain weighted extropy has no sampling-design form here")


@dataclass(frozen=True)
class IntegrandKind:
    """Identifies one u-space integrand; order_index is the i of Psi_i/Phi_i."""

    kind: str
    order_index: int | None = None

    def __post_init__(self):
        if self.kind not in _KINDS:
            raise DomainError(f"unknown integrand kind {self.kind!r}")
        if self.kind in _INDEXED_KINDS:
            if not (isinstance(self.order_index, int) and self.order_index >= 1):
                raise DomainError(f"{self.kind} needs order_index >= 1, got {self.order_index!r}")
        elif self.order_index is not None:
            raise DomainError(f"{self.kind} takes no order_index")


@dataclass(frozen=True)
class MeasureReport:
    """A measure value with its per-factor quadrature diagnostics."""

    value: float
    factor_results: tuple[IntegrationResult, ...]
    quadrature_error: float


def make_integrand(d: Distribution, w: WeightFunction, kind: IntegrandKind) -> Callable:
    """Scalar integrand over u in (0,1) for the requested kind."""
    density = d.pdf_at_quantile
    if density is None:
        density = lambda u: d.pdf(d.quantile(u))  # noqa: E731

    if kind.kind == DELTA_GWJ:

        def integrand(u: float) -> float:
            return eval_weight(w, d.quantile(u)) * float(density(u))

        return integrand

    if kind.kind == LAMBDA:
        exponent, survival_side = 2, False
    elif kind.kind == DELTA:
        exponent, survival_side = 2, True
    elif kind.kind == PSI_I:
        exponent, survival_side = 2 * kind.order_index, False
    else:
        exponent, survival_side = 2 * kind.order_index, True

    def integrand(u: float) -> float:
        base = (1.0 - u) if survival_side else u
        return base**exponent * eval_weight(w, d.quantile(u)) / float(density(u))

    return integrand


def _expectation(d: Distribution, w: WeightFunction, kind: IntegrandKind) -> IntegrationResult:
    return integrate_unit_interval(make_integrand(d, w, kind))


def _require_converged(
    res: IntegrationResult, variant: str, factor_index: int | None = None
) -> IntegrationResult:
    if not res.converged:
        where = "" if factor_index is None else f" (factor i={factor_index})"
        raise DivergenceError(
            f"quadrature did not converge for the {variant} integrand{where}; "
            f"error estimate {res.abs_error_estimate:.3e} after {res.subdivisions} subdivisions",
            variant=variant,
            factor_index=factor_index,
            error_estimate=res.abs_error_estimate,
        )
    return res


def _reject_divergent_past(d: Distribution, w: WeightFunction) -> None:
    # u -> 1 sends Q(u) to the upper endpoint; with an unbounded power weight
    # the past integrands grow like w(Q)/f(Q) and the integral is infinite.
    if w.family_tag == POWER and not math.isfinite(d.support_upper):
        raise DivergenceError(
            "past-variant integral diverges: power weight with unbounded support "
            f"({d.label or d.family_tag})",
            variant=PAST,
        )


def gwj(d: Distribution, w: WeightFunction) -> float:
    """Weighted extropy of the density: -1/2 * int w(Q(u)) f(Q(u)) du."""
    res = _require_converged(_expectation(d, w, IntegrandKind(DELTA_GWJ)), PLAIN)
    return -0.5 * res.value

def gw_cumulative(d: Distribution, w: WeightFunction, variant: str) -> float:
    """Weighted cumulative extropy, past (-1/2 E[Lambda]) or residual (-1/2 E[Delta])."""
    if variant not in (PAST, RESIDUAL):
        raise DomainError(f"variant must be past or residual, got {variant!r}")
    if variant == PAST:
        _reject_divergent_past(d, w)
    kind = IntegrandKind(LAMBDA if variant == PAST else DELTA)
    res = _require_converged(_expectation(d, w, kind), variant)
    return -0.5 * res.value


def measure_report(d: Distribution, w: WeightFunction, spec: MeasureSpec) -> MeasureReport:
    """Evaluate a measure and keep each factor's quadrature result.

    The reported quadrature_error is the first-order propagation of the
    per-factor error estimates through the product and the leading -1/2.
    """
    if spec.variant == PLAIN:
        res = _require_converged(_expectation(d, w, IntegrandKind(DELTA_GWJ)), PLAIN)
        return MeasureReport(-0.5 * res.value, (res,), 0.5 * res.abs_error_estimate)

    if spec.design in (SINGLE, SRS):
        if spec.variant == PAST:
            _reject_divergent_past(d, w)
        kind = IntegrandKind(LAMBDA if spec.variant == PAST else DELTA)
        res = _require_converged(_expectation(d, w, kind), spec.variant)
        factor = res.value
        value = -0.5 * factor**spec.n
        error = 0.5 * spec.n * abs(factor) ** (spec.n - 1) * res.abs_error_estimate
        return MeasureReport(value, (res,), error)

    if spec.variant == PAST:
        _reject_divergent_past(d, w)
        kind_name = PSI_I
    else:
        kind_name = PHI_I
    factors = []
    for i in range(1, spec.n + 1):
        res = _expectation(d, w, IntegrandKind(kind_name, i))
        _require_converged(res, spec.variant, factor_index=i)
        factors.append(res)
    product = 1.0
    for res in factors:
        product *= res.value
    error = 0.0
    for i, res in enumerate(factors):
        rest = 1.0
        for j, other in enumerate(factors):
            if j != i:
                rest *= abs(other.value)
        error += res.abs_error_estimate * rest
    return MeasureReport(-0.5 * product, tuple(factors), 0.5 * error)


def gw_design_measure(d: Distribution, w: WeightFunction, spec: MeasureSpec) -> float:
    """The design-level measure: SRS power form or RSSU product form."""
    return measure_report(d, w, spec).value


def closed_form(d: Distribution, w: WeightFunction, spec: MeasureSpec) -> float | None:
    """Registered closed-form value, or None when no formula covers the input.

    Coverage (power weights x^m only): standard uniform SRS (both variants)
    and maxRSSU/minRSSU; exponential minRSSU; power-survival minRSSU. The
    uniform minRSSU form uses the exponent n on Gamma(m+1), the one the
    u-space integral gives.
    """
    if w.family_tag != POWER:
        return None
    (m,) = w.params
    variant, design, n = spec.variant, spec.design, spec.n
    if variant == PLAIN:
        return None
    if design == SINGLE:
        design = SRS

    if d.family_tag == UNIFORM and d.params == (0.0, 1.0):
        if design == SRS:
            if variant == PAST:
                return -0.5 * (1.0 / (m + 3.0)) ** n
            factor = 1.0 / (m + 1.0) - 2.0 / (m + 2.0) + 1.0 / (m + 3.0)
            return -0.5 * factor**n
        if design == MAX_RSSU:
            product = 1.0
            for i in range(1, n + 1):
                product *= 1.0 / (2.0 * i + m + 1.0)
            return -0.5 * product
        if design == MIN_RSSU:
            product = gamma_beta("gamma", m + 1.0) ** n
            for i in range(1, n + 1):
                product *= gamma_beta("gamma", 2.0 * i + 1.0) / gamma_beta("gamma", 2.0 * i + m + 2.0)
            return -0.5 * product

    if d.family_tag == EXPONENTIAL and variant == RESIDUAL and design == MIN_RSSU:
        (rate,) = d.params
        scale = gamma_beta("gamma", m + 1.0) / (2.0 * rate) ** (m + 1.0)
        return -0.5 * scale**n * (1.0 / math.factorial(n)) ** (m + 1.0)

    if d.family_tag == POWER_SURVIVAL and variant == RESIDUAL and design == MIN_RSSU:
        (b,) = d.params
        product = 1.0
        for i in range(1, n + 1):
            product *= gamma_beta("beta", m + 1.0, 2.0 * i * b + 1.0)
        return -0.5 * product

    return None
