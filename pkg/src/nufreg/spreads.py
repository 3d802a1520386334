"""Per-observation fuzzy error terms under spread-matching constraints,
plus the shared-spread baseline those results are compared against.

The estimated response for observation i is the affine image of x_i under
the crisp coefficients plus an error trapezoid (-l_i, 0, 0, r_i).  Pinning
the estimated total spread to the observed one leaves a single free
parameter per observation, minimized against the integral membership
discrepancy.
"""

from __future__ import annotations

from dataclasses import dataclass
from typing import Callable, Iterable

import numpy as np

from .boxopt import OptimizerConfig, golden_section_min
from .coeffs import FuzzyObservation, estimate_coefficient_curves
from .errors import InfeasibleSpreadError
from .fuznum import (
    MembershipCurve,
    TrapezoidalFuzzyNumber,
    add,
    affine_image,
    discrepancy,
)

__all__ = [
    "ErrorTerm",
    "SpreadConfig",
    "FittedModel",
    "derive_min_spreads",
    "fit_error_term",
    "fit_nonuniform",
    "fit_uniform_baseline",
]

# feasibility slack for constraint arithmetic; anything beyond is a real violation
_FEAS_TOL = 1e-12
_SCAN_POINTS = 1000
_BASELINE_GRID = 33
_BASELINE_STARTS = 3
_BASELINE_SWEEPS = 12


@dataclass(frozen=True, slots=True)
class ErrorTerm:
    """Fuzzy error (-left, 0, 0, right): nonnegative spreads, point core."""

    left: float
    right: float

    def __post_init__(self):
        if self.left < 0.0 or self.right < 0.0:
            raise ValueError(f"spreads must be nonnegative, got ({self.left}, {self.right})")

    def as_trapezoid(self) -> TrapezoidalFuzzyNumber:
        return TrapezoidalFuzzyNumber(-self.left, 0.0, 0.0, self.right)


@dataclass(frozen=True, slots=True)
class SpreadConfig:
    """Spread floors and the one-dimensional search tolerance."""

    l_min: float = 0.0
    r_min: float = 0.0
    search_tol: float = 1e-8

    def __post_init__(self):
        if self.l_min < 0.0 or self.r_min < 0.0:
            raise ValueError("spread floors must be nonnegative")
        if self.search_tol <= 0.0:
            raise ValueError("search_tol must be positive")


@dataclass(frozen=True, slots=True)
class FittedModel:
    """Crisp coefficients, their membership curves, and the fitted
    per-observation error terms with discrepancies."""

    b0_c: float
    b1_c: float
    b0_curve: MembershipCurve
    b1_curve: MembershipCurve
    error_terms: tuple[ErrorTerm, ...]
    per_obs_discrepancy: tuple[float, ...]
    total_discrepancy: float

    def __post_init__(self):
        if len(self.error_terms) != len(self.per_obs_discrepancy):
            raise ValueError("error terms and discrepancies must align")
        if not self.error_terms:
            raise ValueError("a fitted model needs at least one observation")
        if self.total_discrepancy != sum(self.per_obs_discrepancy):
            raise ValueError("total discrepancy must be the sum of the parts")


def derive_min_spreads(data: Iterable[FuzzyObservation]) -> tuple[float, float]:
    """Smallest observed left and right response spreads."""
    data = tuple(data)
    if not data:
        raise ValueError("need at least one observation")
    return (
        min(obs.y.left_spread for obs in data),
        min(obs.y.right_spread for obs in data),
    )


def _min_scalar(
    f: Callable[[float], float], lo: float, hi: float, tol: float, scan_points: int
) -> tuple[float, float]:
    """Golden-section minimum cross-checked against a dense scan.

    When the scan beats golden section the objective was not unimodal;
    the winning scan cell is refined and the better result returned.
    """
    best_t, best_v = golden_section_min(f, lo, hi, tol)
    grid = np.linspace(lo, hi, scan_points)
    vals = [f(float(t)) for t in grid]
    j = int(np.argmin(vals))
    if vals[j] < best_v:
        a = float(grid[max(j - 1, 0)])
        b = float(grid[min(j + 1, scan_points - 1)])
        t_ref, v_ref = golden_section_min(f, a, b, tol)
        if vals[j] < v_ref:
            t_ref, v_ref = float(grid[j]), vals[j]
        if v_ref < best_v:
            best_t, best_v = t_ref, v_ref
    return best_t, best_v


def fit_error_term(
    observation: FuzzyObservation,
    b0_c: float,
    b1_c: float,
    config: SpreadConfig = SpreadConfig(),
) -> tuple[ErrorTerm, float]:
    """Optimal (left, right) spreads and discrepancy for one observation.

    The estimated total spread must equal the observed one, so right =
    slack - left and the left spread is the only free parameter.  Its
    feasible range also honors the spread floors; an empty range raises
    InfeasibleSpreadError.
    """
    base = affine_image(observation.x, b1_c, b0_c)
    observed = observation.y
    slack = observed.total_spread - base.total_spread
    l_lo = max(0.0, config.l_min - base.left_spread)
    l_hi = slack - max(0.0, config.r_min - base.right_spread)
    if slack < -_FEAS_TOL or l_lo > l_hi + _FEAS_TOL:
        raise InfeasibleSpreadError(
            "no feasible error term: observed response "
            f"{observed.knots} leaves slack {slack:.6g} against propagated "
            f"spread {base.total_spread:.6g} with floors "
            f"({config.l_min:g}, {config.r_min:g})"
        )
    slack = max(slack, 0.0)
    l_hi = min(max(l_hi, l_lo), slack)

    def objective(left: float) -> float:
        term = ErrorTerm(left, max(0.0, slack - left))
        return discrepancy(observed, add(base, term.as_trapezoid()))

    if l_hi - l_lo <= config.search_tol:
        best_l = 0.5 * (l_lo + l_hi)
        best_d = objective(best_l)
    else:
        best_l, best_d = _min_scalar(objective, l_lo, l_hi, config.search_tol, _SCAN_POINTS)
    term = ErrorTerm(best_l, max(0.0, slack - best_l))
    return term, best_d


def fit_nonuniform(
    data: Iterable[FuzzyObservation],
    alpha_levels: int = 21,
    opt_config: OptimizerConfig | None = None,
    spread_config: SpreadConfig | None = None,
) -> FittedModel:
    """Full fit: coefficient curves, crisp defuzzification, and one error
    term per observation.

    When no spread config is given the floors default to the smallest
    observed spreads.
    """
    data = tuple(data)
    b0, b1 = estimate_coefficient_curves(data, alpha_levels, opt_config)
    if spread_config is None:
        l_min, r_min = derive_min_spreads(data)
        spread_config = SpreadConfig(l_min=l_min, r_min=r_min)
    terms: list[ErrorTerm] = []
    discs: list[float] = []
    for idx, obs in enumerate(data):
        try:
            term, disc = fit_error_term(obs, b0.crisp, b1.crisp, spread_config)
        except InfeasibleSpreadError as err:
            raise InfeasibleSpreadError(
                f"observation {idx + 1}: {err}", observation=idx
            ) from err
        terms.append(term)
        discs.append(disc)
    return FittedModel(
        b0_c=b0.crisp,
        b1_c=b1.crisp,
        b0_curve=b0.curve,
        b1_curve=b1.curve,
        error_terms=tuple(terms),
        per_obs_discrepancy=tuple(discs),
        total_discrepancy=sum(discs),
    )


def fit_uniform_baseline(
    data: Iterable[FuzzyObservation],
    b0_c: float,
    b1_c: float,
    search_tol: float = 1e-8,
) -> tuple[ErrorTerm, tuple[float, ...], float]:
    """One shared error term minimizing the total discrepancy.

    No spread-matching constraint applies; (left, right) ranges over
    [0, max observed spread] squared.  Multistart coordinate descent from
    the best coarse-grid cells, golden section with dense-scan guard per
    coordinate.  Returns (term, per-observation discrepancies, total).
    """
    data = tuple(data)
    if not data:
        raise ValueError("need at least one observation")
    bases = [affine_image(obs.x, b1_c, b0_c) for obs in data]

    def per_obs(left: float, right: float) -> tuple[float, ...]:
        term = TrapezoidalFuzzyNumber(-left, 0.0, 0.0, right)
        return tuple(
            discrepancy(obs.y, add(base, term)) for obs, base in zip(data, bases)
        )

    def total(left: float, right: float) -> float:
        return sum(per_obs(left, right))

    cap = max(obs.y.total_spread for obs in data)
    if cap <= 0.0:
        term = ErrorTerm(0.0, 0.0)
        discs = per_obs(0.0, 0.0)
        return term, discs, sum(discs)

    grid = np.linspace(0.0, cap, _BASELINE_GRID)
    cells = sorted(
        ((total(float(l), float(r)), float(l), float(r)) for l in grid for r in grid),
    )[:_BASELINE_STARTS]

    best = None
    for start_v, start_l, start_r in cells:
        left, right, value = start_l, start_r, start_v
        for _ in range(_BASELINE_SWEEPS):
            before = value
            left, value = _min_scalar(
                lambda t: total(t, right), 0.0, cap, search_tol, _BASELINE_GRID * 8
            )
            right, value = _min_scalar(
                lambda t: total(left, t), 0.0, cap, search_tol, _BASELINE_GRID * 8
            )
            if before - value <= search_tol:
                break
        key = (value, left, right)
        if best is None or key < best:
            best = key
    value, left, right = best
    term = ErrorTerm(left, right)
    discs = per_obs(left, right)
    return term, discs, sum(discs)
