"""Rule-based forecasting from a fitted model.

Each observation contributes one rule: if the response resembles the
observed trapezoid, the error behaves like the fitted error term.  A new
input activates rules through the membership of its crisp response
estimate, and the activated error terms combine by weight-clipped union
before being trapezoidalized back into a predictable shape.
"""

from __future__ import annotations

from dataclasses import dataclass
from typing import Iterable, NamedTuple

import numpy as np

from .coeffs import FuzzyObservation
from .errors import InvalidModelError
from .fuznum import (
    TrapezoidalFuzzyNumber,
    add,
    affine_image,
    centroid_of_samples,
    membership,
    sample_membership,
)
from .spreads import ErrorTerm, FittedModel

__all__ = ["Rule", "RuleBase", "ForecastResult", "build_rule_base", "activate", "predict"]

# grid resolution for the union centroid
_UNION_GRID = 2001
# rules kept by the nearest-support fallback
_FALLBACK_RULES = 2


class Rule(NamedTuple):
    antecedent: TrapezoidalFuzzyNumber
    consequent: ErrorTerm


@dataclass(frozen=True, slots=True)
class RuleBase:
    """Ordered, nonempty collection of forecast rules."""

    rules: tuple[Rule, ...]

    def __post_init__(self):
        object.__setattr__(self, "rules", tuple(self.rules))
        if not self.rules:
            raise InvalidModelError("a rule base needs at least one rule")

    def __len__(self) -> int:
        return len(self.rules)


@dataclass(frozen=True, slots=True)
class ForecastResult:
    """Crisp core estimate, combined error term, and fuzzy response."""

    crisp_core: float
    error_term: TrapezoidalFuzzyNumber
    response: TrapezoidalFuzzyNumber
    activations: tuple[tuple[int, float], ...]


def build_rule_base(model: FittedModel, data: Iterable[FuzzyObservation]) -> RuleBase:
    """One rule per observation, pairing its response with its error term."""
    data = tuple(data)
    if len(data) != len(model.error_terms):
        raise InvalidModelError(
            f"model fits {len(model.error_terms)} observations, data has {len(data)}"
        )
    return RuleBase(
        tuple(Rule(obs.y, term) for obs, term in zip(data, model.error_terms))
    )


def activate(rules: RuleBase, crisp_estimate: float) -> tuple[tuple[int, float], ...]:
    """(index, weight) pairs for rules with positive activation.

    Weights are memberships of the crisp estimate in the rule antecedents.
    When every membership is zero the nearest supports take over: the two
    closest rules weighted by inverse distance, normalized to sum to one.
    Rules at zero distance (a support endpoint) share the weight equally.
    """
    weights = [
        (idx, membership(rule.antecedent, crisp_estimate))
        for idx, rule in enumerate(rules.rules)
    ]
    active = tuple((idx, w) for idx, w in weights if w > 0.0)
    if active:
        return active
    distances = [
        (max(rule.antecedent.l - crisp_estimate, crisp_estimate - rule.antecedent.r, 0.0), idx)
        for idx, rule in enumerate(rules.rules)
    ]
    distances.sort()
    if distances[0][0] == 0.0:
        at_zero = sorted(idx for d, idx in distances if d == 0.0)
        share = 1.0 / len(at_zero)
        return tuple((idx, share) for idx in at_zero)
    nearest = distances[:_FALLBACK_RULES]
    inv = [1.0 / d for d, _ in nearest]
    norm = sum(inv)
    return tuple((idx, w / norm) for (_, idx), w in zip(nearest, inv))


def predict(model: FittedModel, rules: RuleBase, x_new: TrapezoidalFuzzyNumber) -> ForecastResult:
    """Forecast the fuzzy response at a new input.

    The crisp core estimate activates rules; activated error terms are
    combined by max over min(weight, membership) on a dense grid, then
    trapezoidalized with the union support as extremes and the grid
    centroid as point core.  The response adds that error to the affine
    image of the input.
    """
    core_mid = 0.5 * (x_new.m1 + x_new.m2)
    crisp_core = model.b0_c + model.b1_c * core_mid
    activations = activate(rules, crisp_core)

    supports = [rules.rules[idx].consequent.as_trapezoid() for idx, _ in activations]
    lo = min(t.l for t in supports)
    hi = max(t.r for t in supports)
    if hi == lo:
        coa = lo
    else:
        zs = np.linspace(lo, hi, _UNION_GRID)
        mus = np.zeros_like(zs)
        for (_, weight), term in zip(activations, supports):
            np.maximum(mus, np.minimum(weight, sample_membership(term, zs)), out=mus)
        coa = min(max(centroid_of_samples(zs, mus), lo), hi)
    error = TrapezoidalFuzzyNumber(lo, coa, coa, hi)
    response = add(affine_image(x_new, model.b1_c, model.b0_c), error)
    return ForecastResult(
        crisp_core=crisp_core,
        error_term=error,
        response=response,
        activations=activations,
    )
