"""Bound-constrained optimization of least-squares coefficient functionals
over alpha-cut boxes.

At a fixed explanatory vector both the slope and the intercept are affine
in every response, so the response block is optimized analytically from
coefficient signs.  The explanatory block, where the functionals are
rational, is handled by multistart projected coordinate search seeded from
box vertices and random interior points.  Results are deterministic for
fixed inputs and seed.
"""

from __future__ import annotations

import math
from dataclasses import dataclass
from typing import Callable, Sequence

import numpy as np

from .errors import IllPosedProblemError
from .fuznum import Interval

__all__ = [
    "SLOPE",
    "INTERCEPT",
    "OptimizerConfig",
    "BoxProblem",
    "affine_reduction_signs",
    "golden_section_min",
    "solve_box",
]

SLOPE = "slope"
INTERCEPT = "intercept"

_OBJECTIVES = (SLOPE, INTERCEPT)
_SENSES = ("min", "max")

# vertex enumeration cap: 2**k starts up to here, seeded sampling beyond
_VERTEX_LIMIT = 10
_LINE_SCAN_POINTS = 33
_MAX_ZOOM_ROUNDS = 12

_INV_PHI = (math.sqrt(5.0) - 1.0) / 2.0
_INV_PHI2 = (3.0 - math.sqrt(5.0)) / 2.0


@dataclass(frozen=True, slots=True)
class OptimizerConfig:
    """Knobs for the multistart box search."""

    multistart_count: int = 32
    max_iterations: int = 500
    convergence_tol: float = 1e-9
    rng_seed: int = 0

    def __post_init__(self):
        if self.multistart_count < 1:
            raise ValueError("multistart_count must be at least 1")
        if self.max_iterations < 1:
            raise ValueError("max_iterations must be at least 1")
        if self.convergence_tol <= 0.0:
            raise ValueError("convergence_tol must be positive")


@dataclass(frozen=True, slots=True)
class BoxProblem:
    """One bound problem: optimize slope or intercept over a box of
    explanatory and response intervals."""

    x_bounds: tuple[Interval, ...]
    y_bounds: tuple[Interval, ...]
    objective: str
    sense: str

    def __post_init__(self):
        object.__setattr__(self, "x_bounds", tuple(self.x_bounds))
        object.__setattr__(self, "y_bounds", tuple(self.y_bounds))
        if len(self.x_bounds) != len(self.y_bounds):
            raise ValueError("x_bounds and y_bounds must have equal length")
        if len(self.x_bounds) < 2:
            raise ValueError("need at least two observations")
        if self.objective not in _OBJECTIVES:
            raise ValueError(f"objective must be one of {_OBJECTIVES}")
        if self.sense not in _SENSES:
            raise ValueError(f"sense must be one of {_SENSES}")


def golden_section_min(
    f: Callable[[float], float], lo: float, hi: float, tol: float
) -> tuple[float, float]:
    """Golden-section minimization of ``f`` on [lo, hi] to bracket ``tol``.

    Returns (argmin, value).  Assumes unimodality; callers that cannot
    guarantee it should cross-check against a dense scan.
    """
    if hi < lo:
        raise ValueError("empty search interval")
    a, b = lo, hi
    h = b - a
    if h <= tol:
        x = 0.5 * (a + b)
        return x, f(x)
    n = max(1, int(math.ceil(math.log(tol / h) / math.log(_INV_PHI))))
    c = a + _INV_PHI2 * h
    d = a + _INV_PHI * h
    yc = f(c)
    yd = f(d)
    for _ in range(n - 1):
        h *= _INV_PHI
        if yc < yd:
            b, d, yd = d, c, yc
            c = a + _INV_PHI2 * h
            yc = f(c)
        else:
            a, c, yc = c, d, yd
            d = a + _INV_PHI * h
            yd = f(d)
    if yc < yd:
        return c, yc
    return d, yd


def _response_coefficients(x: np.ndarray, objective: str) -> np.ndarray:
    """Linear coefficient of each response in the chosen functional at a
    fixed explanatory vector.  Both functionals reduce to a plain dot
    product with these coefficients."""
    n = x.size
    xbar = x.mean()
    dev = x - xbar
    sxx = float(dev @ dev)
    if sxx == 0.0:
        raise IllPosedProblemError(
            "all explanatory values coincide; the slope denominator vanishes"
        )
    if objective == SLOPE:
        return dev / sxx
    return 1.0 / n - xbar * dev / sxx


def affine_reduction_signs(x: Sequence[float], objective: str) -> tuple[int, ...]:
    """Sign of the partial derivative of the selected functional with
    respect to each response, at a fixed explanatory vector."""
    if objective not in _OBJECTIVES:
        raise ValueError(f"objective must be one of {_OBJECTIVES}")
    coefs = _response_coefficients(np.asarray(x, dtype=float), objective)
    return tuple(int(np.sign(c)) for c in coefs)


def _batch_values(
    xs: np.ndarray,
    ylo: np.ndarray,
    yhi: np.ndarray,
    objective: str,
    sense: str,
) -> np.ndarray:
    """Inner-optimal objective values for a batch of explanatory vectors.

    Responses are picked bound-by-bound from coefficient signs; a zero
    coefficient takes the interval midpoint (the value is unaffected, the
    candidate stays deterministic).
    """
    xbar = xs.mean(axis=1, keepdims=True)
    dev = xs - xbar
    sxx = np.einsum("ij,ij->i", dev, dev)[:, np.newaxis]
    if objective == SLOPE:
        coefs = dev / sxx
    else:
        coefs = 1.0 / xs.shape[1] - xbar * dev / sxx
    ymid = 0.5 * (ylo + yhi)
    if sense == "min":
        ys = np.where(coefs > 0.0, ylo, np.where(coefs < 0.0, yhi, ymid))
    else:
        ys = np.where(coefs > 0.0, yhi, np.where(coefs < 0.0, ylo, ymid))
    return np.einsum("ij,ij->i", coefs, ys)


def solve_box(problem: BoxProblem, config: OptimizerConfig = OptimizerConfig()) -> float:
    """Optimal value of the selected functional over the box.

    Raises IllPosedProblemError when every explanatory interval shares a
    common point, since the box then contains vectors with a vanishing
    slope denominator.
    """
    xlo = np.array([iv.lo for iv in problem.x_bounds], dtype=float)
    xhi = np.array([iv.hi for iv in problem.x_bounds], dtype=float)
    if xlo.max() <= xhi.min():
        raise IllPosedProblemError(
            "explanatory intervals share a common point; "
            "all x values may coincide inside the search box"
        )
    ylo = np.array([iv.lo for iv in problem.y_bounds], dtype=float)
    yhi = np.array([iv.hi for iv in problem.y_bounds], dtype=float)

    def values(xs: np.ndarray) -> np.ndarray:
        return _batch_values(xs, ylo, yhi, problem.objective, problem.sense)

    # maximization runs through the same minimizer on negated values
    flip = 1.0 if problem.sense == "min" else -1.0

    def cost(xs: np.ndarray) -> np.ndarray:
        return flip * values(xs)

    free = np.flatnonzero(xhi > xlo)
    if free.size == 0:
        return float(values(xlo[np.newaxis, :])[0])

    starts = _starting_points(xlo, xhi, free, config)
    costs, points = _refine_starts(starts, xlo, xhi, free, cost, config)
    best = min(range(len(costs)), key=lambda s: (costs[s], tuple(points[s])))
    return flip * float(costs[best])


def _starting_points(
    xlo: np.ndarray, xhi: np.ndarray, free: np.ndarray, config: OptimizerConfig
) -> np.ndarray:
    """Box vertices (all of them for up to 2**10, a seeded sample beyond)
    plus seeded uniform interior points."""
    rng = np.random.default_rng(config.rng_seed)
    k = free.size
    if k <= _VERTEX_LIMIT:
        bits = ((np.arange(2**k)[:, np.newaxis] >> np.arange(k)) & 1).astype(float)
    else:
        bits = rng.integers(0, 2, size=(config.multistart_count, k)).astype(float)
    vertices = np.tile(xlo, (bits.shape[0], 1))
    vertices[:, free] = xlo[free] + bits * (xhi[free] - xlo[free])
    interior = np.tile(xlo, (config.multistart_count, 1))
    u = rng.uniform(size=(config.multistart_count, k))
    interior[:, free] = xlo[free] + u * (xhi[free] - xlo[free])
    return np.vstack([vertices, interior])


def _refine_starts(
    starts: np.ndarray,
    xlo: np.ndarray,
    xhi: np.ndarray,
    free: np.ndarray,
    cost: Callable[[np.ndarray], np.ndarray],
    config: OptimizerConfig,
) -> tuple[np.ndarray, np.ndarray]:
    """Projected coordinate search over every start at once.

    Each sweep runs a zoomed line scan per free coordinate: a batched grid
    over the full interval, then repeatedly re-gridded around each start's
    best cell until the bracket width falls under the convergence
    tolerance.  A start only moves when the scan strictly improves it, so
    costs are non-increasing; sweeps stop once the best improvement drops
    below the tolerance.
    """
    count = starts.shape[0]
    grid01 = np.linspace(0.0, 1.0, _LINE_SCAN_POINTS)
    rows = np.arange(count)
    xs = starts.copy()
    current = cost(xs)
    for _ in range(config.max_iterations):
        sweep_gain = 0.0
        for i in free:
            width = xhi[i] - xlo[i]
            rounds = _zoom_rounds(width, config.convergence_tol)
            los = np.full(count, xlo[i])
            his = np.full(count, xhi[i])
            for _ in range(rounds):
                ts = los[:, np.newaxis] + (his - los)[:, np.newaxis] * grid01
                batch = np.repeat(xs, _LINE_SCAN_POINTS, axis=0)
                batch[:, i] = ts.ravel()
                vals = cost(batch).reshape(count, _LINE_SCAN_POINTS)
                j = np.argmin(vals, axis=1)
                t = ts[rows, j]
                v = vals[rows, j]
                cell = (his - los) / (_LINE_SCAN_POINTS - 1)
                los = np.maximum(xlo[i], t - cell)
                his = np.minimum(xhi[i], t + cell)
            better = v < current
            xs[better, i] = t[better]
            gain = np.where(better, current - v, 0.0)
            current = np.where(better, v, current)
            sweep_gain = max(sweep_gain, float(gain.max()))
        if sweep_gain <= config.convergence_tol:
            break
    return current, xs


def _zoom_rounds(width: float, tol: float) -> int:
    """Rounds of grid shrinking needed to bring the bracket under tol."""
    if width <= tol:
        return 1
    shrink = (_LINE_SCAN_POINTS - 1) / 2.0
    rounds = int(math.ceil(math.log(width / tol) / math.log(shrink)))
    return min(max(rounds, 1), _MAX_ZOOM_ROUNDS)
