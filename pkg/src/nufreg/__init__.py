"""Fuzzy linear regression with crisp coefficients and non-uniform spreads.

The pipeline has three phases.  First the least-squares slope and
intercept are extended to fuzzy quantities: their membership curves are
traced by solving bound-constrained min/max problems over the alpha-cut
boxes of the data.  Second, each curve is defuzzified by center of area
into a crisp coefficient.  Third, every observation gets its own fuzzy
error term, sized so the estimated response reproduces the observed total
spread while minimizing the integral membership discrepancy.  Fitted
models forecast new inputs through a rule base keyed on the observed
responses.

Quick start::

    from nufreg import FuzzyObservation, TrapezoidalFuzzyNumber, fit_nonuniform

    data = [
        FuzzyObservation(
            TrapezoidalFuzzyNumber.crisp(1.0),
            TrapezoidalFuzzyNumber(2.0, 2.5, 2.5, 3.0),
        ),
        ...
    ]
    model = fit_nonuniform(data)
    print(model.b0_c, model.b1_c, model.total_discrepancy)
"""

from .boxopt import (
    INTERCEPT,
    SLOPE,
    BoxProblem,
    OptimizerConfig,
    affine_reduction_signs,
    golden_section_min,
    solve_box,
)
from .coeffs import (
    CoefficientEstimate,
    FuzzyObservation,
    crisp_least_squares,
    estimate_coefficient_curves,
)
from .errors import (
    DegenerateMembershipError,
    FitError,
    IllPosedProblemError,
    InfeasibleSpreadError,
    InvalidModelError,
    SolverQualityWarning,
)
from .forecast import (
    ForecastResult,
    Rule,
    RuleBase,
    activate,
    build_rule_base,
    predict,
)
from .fuznum import (
    Interval,
    MembershipCurve,
    TrapezoidalFuzzyNumber,
    add,
    affine_image,
    alpha_cut,
    centroid_of_samples,
    coa_defuzzify,
    discrepancy,
    membership,
    sample_membership,
)
from .spreads import (
    ErrorTerm,
    FittedModel,
    SpreadConfig,
    derive_min_spreads,
    fit_error_term,
    fit_nonuniform,
    fit_uniform_baseline,
)

__version__ = "0.1.0"

__all__ = [
    "__version__",
    "Interval",
    "TrapezoidalFuzzyNumber",
    "MembershipCurve",
    "alpha_cut",
    "membership",
    "sample_membership",
    "affine_image",
    "add",
    "coa_defuzzify",
    "centroid_of_samples",
    "discrepancy",
    "SLOPE",
    "INTERCEPT",
    "BoxProblem",
    "OptimizerConfig",
    "affine_reduction_signs",
    "golden_section_min",
    "solve_box",
    "FuzzyObservation",
    "CoefficientEstimate",
    "crisp_least_squares",
    "estimate_coefficient_curves",
    "ErrorTerm",
    "SpreadConfig",
    "FittedModel",
    "derive_min_spreads",
    "fit_error_term",
    "fit_nonuniform",
    "fit_uniform_baseline",
    "Rule",
    "RuleBase",
    "ForecastResult",
    "build_rule_base",
    "activate",
    "predict",
    "FitError",
    "IllPosedProblemError",
    "InfeasibleSpreadError",
    "DegenerateMembershipError",
    "InvalidModelError",
    "SolverQualityWarning",
]
