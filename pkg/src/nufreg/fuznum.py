"""Trapezoidal fuzzy numbers and the integral machinery built on them.

Everything in this module is a pure function over immutable values:
alpha-cuts, piecewise-linear membership evaluation, affine images, fuzzy
addition, center-of-area defuzzification, and the exact integral
discrepancy between two membership functions.
"""

from __future__ import annotations

from dataclasses import dataclass

import numpy as np

from .errors import DegenerateMembershipError

__all__ = [
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
]


@dataclass(frozen=True, slots=True)
class Interval:
    """Closed real interval [lo, hi]."""

    lo: float
    hi: float

    def __post_init__(self):
        if not self.lo <= self.hi:
            raise ValueError(f"interval bounds out of order: [{self.lo}, {self.hi}]")

    @property
    def width(self) -> float:
        return self.hi - self.lo

    @property
    def midpoint(self) -> float:
        return 0.5 * (self.lo + self.hi)

    def contains(self, value: float, tol: float = 0.0) -> bool:
        return self.lo - tol <= value <= self.hi + tol


@dataclass(frozen=True, slots=True)
class TrapezoidalFuzzyNumber:
    """Trapezoidal fuzzy number with knots (l, m1, m2, r).

    Membership rises linearly from 0 at ``l`` to 1 at ``m1``, stays 1 on
    the core [m1, m2], and falls linearly back to 0 at ``r``.  A crisp
    value is the degenerate case l == m1 == m2 == r, which behaves as a
    point indicator throughout the library.
    """

    l: float
    m1: float
    m2: float
    r: float

    def __post_init__(self):
        if not self.l <= self.m1 <= self.m2 <= self.r:
            raise ValueError(
                "trapezoid knots must satisfy l <= m1 <= m2 <= r, got "
                f"({self.l}, {self.m1}, {self.m2}, {self.r})"
            )

    @classmethod
    def crisp(cls, value: float) -> "TrapezoidalFuzzyNumber":
        """Point indicator for a crisp value."""
        return cls(value, value, value, value)

    @property
    def is_crisp(self) -> bool:
        return self.l == self.r

    @property
    def knots(self) -> tuple[float, float, float, float]:
        return (self.l, self.m1, self.m2, self.r)

    @property
    def support(self) -> Interval:
        return Interval(self.l, self.r)

    @property
    def core(self) -> Interval:
        return Interval(self.m1, self.m2)

    @property
    def left_spread(self) -> float:
        return self.m1 - self.l

    @property
    def right_spread(self) -> float:
        return self.r - self.m2

    @property
    def total_spread(self) -> float:
        return self.r - self.l


@dataclass(frozen=True, slots=True)
class MembershipCurve:
    """Sampled alpha-cut family of a fuzzy quantity.

    ``levels`` holds (alpha, cut) pairs with alphas strictly increasing
    from 0 to 1 and cuts nested: a higher alpha never widens the cut.
    """

    levels: tuple[tuple[float, Interval], ...]

    def __post_init__(self):
        if len(self.levels) < 2:
            raise ValueError("a membership curve needs at least two alpha levels")
        alphas = [a for a, _ in self.levels]
        if alphas[0] != 0.0 or alphas[-1] != 1.0:
            raise ValueError("alpha grid must start at 0 and end at 1")
        if any(b <= a for a, b in zip(alphas, alphas[1:])):
            raise ValueError("alpha grid must be strictly increasing")
        for (_, wide), (_, narrow) in zip(self.levels, self.levels[1:]):
            if narrow.lo < wide.lo or narrow.hi > wide.hi:
                raise ValueError("alpha-cuts must be nested")

    @property
    def support(self) -> Interval:
        return self.levels[0][1]

    @property
    def core(self) -> Interval:
        return self.levels[-1][1]

    def reconstruction(self) -> tuple[np.ndarray, np.ndarray]:
        """Knot arrays (z, mu) of the piecewise-linear membership rebuilt
        from the sampled cut boundaries.

        The z array is non-decreasing: left cut bounds in rising alpha
        order, then right bounds in falling alpha order.
        """
        alphas = [a for a, _ in self.levels]
        los = [cut.lo for _, cut in self.levels]
        his = [cut.hi for _, cut in self.levels]
        zs = np.array(los + his[::-1], dtype=float)
        mus = np.array(alphas + alphas[::-1], dtype=float)
        return zs, mus


def alpha_cut(f: TrapezoidalFuzzyNumber, alpha: float) -> Interval:
    """Alpha-cut of a trapezoid; the closed support at alpha == 0.

    Bounds are convex combinations of the knots so the endpoints are hit
    exactly at alpha 0 and 1 and ordering survives rounding.
    """
    if not 0.0 <= alpha <= 1.0:
        raise ValueError(f"alpha must lie in [0, 1], got {alpha}")
    lo = (1.0 - alpha) * f.l + alpha * f.m1
    hi = (1.0 - alpha) * f.r + alpha * f.m2
    return Interval(lo, hi)


def membership(f: TrapezoidalFuzzyNumber, y: float) -> float:
    """Piecewise-linear membership of ``y`` in ``f``.

    Degenerate legs are covered by the core branch, so a crisp number
    assigns membership 1 to its point and 0 elsewhere.
    """
    if y < f.l or y > f.r:
        return 0.0
    if f.m1 <= y <= f.m2:
        return 1.0
    if y < f.m1:
        return (y - f.l) / (f.m1 - f.l)
    return (f.r - y) / (f.r - f.m2)


def sample_membership(f: TrapezoidalFuzzyNumber, zs) -> np.ndarray:
    """Membership of ``f`` over an array of points."""
    zs = np.asarray(zs, dtype=float)
    out = np.zeros_like(zs)
    out[(zs >= f.m1) & (zs <= f.m2)] = 1.0
    if f.m1 > f.l:
        leg = (zs >= f.l) & (zs < f.m1)
        out[leg] = (zs[leg] - f.l) / (f.m1 - f.l)
    if f.r > f.m2:
        leg = (zs > f.m2) & (zs <= f.r)
        out[leg] = (f.r - zs[leg]) / (f.r - f.m2)
    return out


def affine_image(f: TrapezoidalFuzzyNumber, a: float, b: float) -> TrapezoidalFuzzyNumber:
    """Image of ``f`` under z -> a*z + b; endpoints swap when a < 0."""
    if a >= 0.0:
        return TrapezoidalFuzzyNumber(a * f.l + b, a * f.m1 + b, a * f.m2 + b, a * f.r + b)
    return TrapezoidalFuzzyNumber(a * f.r + b, a * f.m2 + b, a * f.m1 + b, a * f.l + b)


def add(f: TrapezoidalFuzzyNumber, g: TrapezoidalFuzzyNumber) -> TrapezoidalFuzzyNumber:
    """Componentwise fuzzy addition of two trapezoids."""
    return TrapezoidalFuzzyNumber(f.l + g.l, f.m1 + g.m1, f.m2 + g.m2, f.r + g.r)


def coa_defuzzify(shape) -> float:
    """Center of area of a trapezoid or of a sampled membership curve.

    Trapezoids use the closed-form moment quotient; curves use trapezoid
    quadrature over the piecewise-linear reconstruction knots.  A
    zero-width support defuzzifies to the point itself.
    """
    if isinstance(shape, TrapezoidalFuzzyNumber):
        if shape.r == shape.l:
            return shape.l
        w = shape.m1 - shape.l
        v = shape.r - shape.m2
        # factored core moment; the squared form cancels catastrophically
        # on narrow shapes far from the origin
        num = (
            w * (shape.l / 2.0 + w / 3.0)
            + (shape.m2 - shape.m1) * (shape.m1 + shape.m2) / 2.0
            + v * (shape.r / 2.0 - v / 3.0)
        )
        den = w / 2.0 + (shape.m2 - shape.m1) + v / 2.0
        return num / den
    if isinstance(shape, MembershipCurve):
        zs, mus = shape.reconstruction()
        return centroid_of_samples(zs, mus)
    raise TypeError(f"cannot defuzzify {type(shape).__name__}")


def centroid_of_samples(zs, mus) -> float:
    """Trapezoid-rule centroid of a sampled membership function.

    A zero-width support is treated as a point indicator.  Zero area over
    a wider support has no centroid and raises.
    """
    zs = np.asarray(zs, dtype=float)
    mus = np.asarray(mus, dtype=float)
    if zs[-1] == zs[0]:
        return float(zs[0])
    den = float(np.trapezoid(mus, zs))
    if den <= 0.0:
        raise DegenerateMembershipError(
            "membership has zero area over a non-degenerate support"
        )
    # integrate about the support midpoint to keep the moment well
    # conditioned for narrow supports far from the origin
    mid = 0.5 * (zs[0] + zs[-1])
    num = float(np.trapezoid((zs - mid) * mus, zs))
    return mid + num / den


def discrepancy(observed: TrapezoidalFuzzyNumber, estimated: TrapezoidalFuzzyNumber) -> float:
    """Integral of |mu_observed - mu_estimated| over the union of supports.

    Exact for trapezoids: both memberships are linear between consecutive
    knots of the merged knot set, so each gap integrates in closed form
    after splitting at the sign change, if any.  The difference on a gap
    is pinned by two interior samples rather than endpoint values, which
    keeps jump discontinuities at degenerate legs out of the integrand.
    """
    knots = sorted(
        {
            observed.l, observed.m1, observed.m2, observed.r,
            estimated.l, estimated.m1, estimated.m2, estimated.r,
        }
    )
    total = 0.0
    for a, b in zip(knots, knots[1:]):
        gap = b - a
        if gap <= 0.0:
            continue
        z1 = a + gap / 3.0
        z2 = b - gap / 3.0
        if z2 <= z1:
            # gap at float resolution: one sample decides the whole sliver
            mid = 0.5 * (a + b)
            total += abs(membership(observed, mid) - membership(estimated, mid)) * gap
            continue
        d1 = membership(observed, z1) - membership(estimated, z1)
        d2 = membership(observed, z2) - membership(estimated, z2)
        # endpoint values of the linear difference, extrapolated from the
        # third-point samples; never divides by the (possibly tiny) gap
        da = 2.0 * d1 - d2
        db = 2.0 * d2 - d1
        if da * db < 0.0:
            u = da / (da - db)
            total += 0.5 * gap * (abs(da) * u + abs(db) * (1.0 - u))
        else:
            total += 0.5 * abs(da + db) * gap
    return total
