"""Coefficient membership curves.

Sweeps the four bound problems (min and max of slope and intercept) over a
uniform alpha grid, assembles the cuts into nested membership curves, and
defuzzifies each curve to a crisp coefficient by center of area.
"""

from __future__ import annotations

import warnings
from dataclasses import dataclass
from typing import Iterable, Sequence

import numpy as np

from .boxopt import INTERCEPT, SLOPE, BoxProblem, OptimizerConfig, solve_box
from .errors import IllPosedProblemError, SolverQualityWarning
from .fuznum import (
    Interval,
    MembershipCurve,
    TrapezoidalFuzzyNumber,
    alpha_cut,
    coa_defuzzify,
)

__all__ = [
    "FuzzyObservation",
    "CoefficientEstimate",
    "crisp_least_squares",
    "estimate_coefficient_curves",
]

# nesting repairs beyond this are reported, anything smaller is solver noise
_REPAIR_WARN = 1e-6


@dataclass(frozen=True, slots=True)
class FuzzyObservation:
    """One (x, y) pair of trapezoidal fuzzy numbers."""

    x: TrapezoidalFuzzyNumber
    y: TrapezoidalFuzzyNumber

    @classmethod
    def crisp(cls, x: float, y: float) -> "FuzzyObservation":
        return cls(TrapezoidalFuzzyNumber.crisp(x), TrapezoidalFuzzyNumber.crisp(y))


@dataclass(frozen=True, slots=True)
class CoefficientEstimate:
    """Membership curve of one coefficient and its crisp center-of-area."""

    curve: MembershipCurve
    crisp: float

    def __post_init__(self):
        if not self.curve.support.contains(self.crisp, tol=1e-9):
            raise ValueError("crisp value must lie inside the curve support")


def crisp_least_squares(x: Sequence[float], y: Sequence[float]) -> tuple[float, float]:
    """Ordinary least-squares (intercept, slope) for crisp samples."""
    x = np.asarray(x, dtype=float)
    y = np.asarray(y, dtype=float)
    if x.size != y.size:
        raise ValueError("x and y must have equal length")
    if x.size < 2:
        raise ValueError("need at least two observations")
    dev = x - x.mean()
    sxx = float(dev @ dev)
    if sxx == 0.0:
        raise IllPosedProblemError("all explanatory values coincide")
    b1 = float(dev @ y) / sxx
    b0 = float(y.mean()) - b1 * float(x.mean())
    return b0, b1


def estimate_coefficient_curves(
    data: Iterable[FuzzyObservation],
    alpha_levels: int = 21,
    config: OptimizerConfig | None = None,
) -> tuple[CoefficientEstimate, CoefficientEstimate]:
    """Membership curves and crisp values for (intercept, slope).

    Cuts are assembled from the top level down so nesting holds by
    construction; repairs larger than the solver tolerance raise a
    SolverQualityWarning.
    """
    data = tuple(data)
    if len(data) < 2:
        raise ValueError("need at least two observations")
    if alpha_levels < 2:
        raise ValueError("need at least two alpha levels")
    if config is None:
        config = OptimizerConfig()
    alphas = np.linspace(0.0, 1.0, alpha_levels)
    bounds: dict[str, list[tuple[float, float, float]]] = {SLOPE: [], INTERCEPT: []}
    for alpha in alphas:
        xcuts = tuple(alpha_cut(obs.x, float(alpha)) for obs in data)
        ycuts = tuple(alpha_cut(obs.y, float(alpha)) for obs in data)
        for objective in (INTERCEPT, SLOPE):
            try:
                lo = solve_box(BoxProblem(xcuts, ycuts, objective, "min"), config)
                hi = solve_box(BoxProblem(xcuts, ycuts, objective, "max"), config)
            except IllPosedProblemError as err:
                raise IllPosedProblemError(
                    f"{err} (alpha={float(alpha):g})", alpha=float(alpha)
                ) from err
            bounds[objective].append((float(alpha), lo, hi))
    b0_curve = _assemble_curve(bounds[INTERCEPT])
    b1_curve = _assemble_curve(bounds[SLOPE])
    b0 = CoefficientEstimate(b0_curve, coa_defuzzify(b0_curve))
    b1 = CoefficientEstimate(b1_curve, coa_defuzzify(b1_curve))
    return b0, b1


def _assemble_curve(levels: list[tuple[float, float, float]]) -> MembershipCurve:
    """Clamp each cut to contain the one above it, widening outward."""
    los = [lo for _, lo, _ in levels]
    his = [hi for _, _, hi in levels]
    worst = 0.0
    for k in range(len(levels) - 2, -1, -1):
        if los[k] > los[k + 1]:
            worst = max(worst, los[k] - los[k + 1])
            los[k] = los[k + 1]
        if his[k] < his[k + 1]:
            worst = max(worst, his[k + 1] - his[k])
            his[k] = his[k + 1]
    if worst > _REPAIR_WARN:
        warnings.warn(
            f"alpha-cut nesting repaired by {worst:.3g}; solver quality is suspect",
            SolverQualityWarning,
        )
    return MembershipCurve(
        tuple(
            (alpha, Interval(lo, hi))
            for (alpha, _, _), lo, hi in zip(levels, los, his)
        )
    )
