"""Independent brute-force oracles the tests compare the library against.

Each oracle favors transparency over speed: dense grids, exhaustive
enumeration, and plain quadrature instead of the library's closed forms
and searches.
"""

from __future__ import annotations

import numpy as np

from nufreg import TrapezoidalFuzzyNumber, add, affine_image, discrepancy


def interp_membership(t: TrapezoidalFuzzyNumber, zs: np.ndarray) -> np.ndarray:
    """Membership via linear interpolation through the four knots."""
    return np.interp(
        zs, [t.l, t.m1, t.m2, t.r], [0.0, 1.0, 1.0, 0.0], left=0.0, right=0.0
    )


def quad_discrepancy(f: TrapezoidalFuzzyNumber, g: TrapezoidalFuzzyNumber, step: float = 1e-5) -> float:
    """Trapezoid-rule quadrature of |mu_f - mu_g| over the support union."""
    lo = min(f.l, g.l)
    hi = max(f.r, g.r)
    if hi <= lo:
        return 0.0
    n = int(np.ceil((hi - lo) / step)) + 1
    zs = np.linspace(lo, hi, n)
    diff = np.abs(interp_membership(f, zs) - interp_membership(g, zs))
    return float(np.trapezoid(diff, zs))


def quad_coa(f: TrapezoidalFuzzyNumber, step: float = 1e-5) -> float:
    """Quadrature center of area of a trapezoid."""
    if f.r == f.l:
        return f.l
    n = int(np.ceil((f.r - f.l) / step)) + 1
    zs = np.linspace(f.l, f.r, n)
    mus = interp_membership(f, zs)
    return float(np.trapezoid(zs * mus, zs) / np.trapezoid(mus, zs))


def curve_quad_coa(curve, step: float = 1e-5) -> float:
    """Quadrature center of area of a sampled membership curve."""
    zs_k, mus_k = curve.reconstruction()
    lo, hi = float(zs_k[0]), float(zs_k[-1])
    if hi == lo:
        return lo
    n = int(np.ceil((hi - lo) / step)) + 1
    zs = np.linspace(lo, hi, n)
    mus = np.interp(zs, zs_k, mus_k)
    return float(np.trapezoid(zs * mus, zs) / np.trapezoid(mus, zs))


def batch_objective(xs: np.ndarray, ylo: np.ndarray, yhi: np.ndarray, objective: str, sense: str) -> np.ndarray:
    """Inner-optimal objective values for explanatory vectors, written out
    independently of the library (same einsum reduction, so crisp-x
    comparisons can demand exact equality)."""
    xbar = xs.mean(axis=1, keepdims=True)
    dev = xs - xbar
    sxx = np.einsum("ij,ij->i", dev, dev)[:, np.newaxis]
    if objective == "slope":
        coefs = dev / sxx
    else:
        coefs = 1.0 / xs.shape[1] - xbar * dev / sxx
    ymid = 0.5 * (ylo + yhi)
    if sense == "min":
        ys = np.where(coefs > 0.0, ylo, np.where(coefs < 0.0, yhi, ymid))
    else:
        ys = np.where(coefs > 0.0, yhi, np.where(coefs < 0.0, ylo, ymid))
    return np.einsum("ij,ij->i", coefs, ys)


def vertex_bound(xcuts, ycuts, objective: str, sense: str) -> float:
    """Exhaustive y-vertex enumeration at crisp x (2**n candidates)."""
    x = np.array([iv.lo for iv in xcuts], dtype=float)
    n = x.size
    ylo = np.array([iv.lo for iv in ycuts], dtype=float)
    yhi = np.array([iv.hi for iv in ycuts], dtype=float)
    xbar = x.mean()
    dev = x - xbar
    sxx = np.einsum("i,i->", dev, dev)
    if objective == "slope":
        coefs = dev / sxx
    else:
        coefs = 1.0 / n - xbar * dev / sxx
    bits = ((np.arange(2**n)[:, np.newaxis] >> np.arange(n)) & 1).astype(bool)
    ys = np.where(bits, yhi, ylo)
    vals = np.einsum("j,ij->i", coefs, ys)
    return float(vals.min()) if sense == "min" else float(vals.max())


def textbook_least_squares(x: np.ndarray, y: np.ndarray) -> tuple[float, float]:
    """Plain covariance-form least squares, deliberately a different
    arithmetic route from the library's reduced linear form."""
    xbar = float(np.mean(x))
    ybar = float(np.mean(y))
    num = float(np.sum((x - xbar) * (y - ybar)))
    den = float(np.sum((x - xbar) ** 2))
    b1 = num / den
    return ybar - b1 * xbar, b1


def grid_bound(xcuts, ycuts, objective: str, sense: str, points: int = 21) -> float:
    """Dense grid search over the x box with the analytic response step."""
    axes = [np.linspace(iv.lo, iv.hi, points) for iv in xcuts]
    mesh = np.stack(np.meshgrid(*axes, indexing="ij"), axis=-1).reshape(-1, len(xcuts))
    ylo = np.array([iv.lo for iv in ycuts], dtype=float)
    yhi = np.array([iv.hi for iv in ycuts], dtype=float)
    vals = batch_objective(mesh, ylo, yhi, objective, sense)
    return float(vals.min()) if sense == "min" else float(vals.max())


def scan_spread_objective(obs, b0_c: float, b1_c: float, l_min: float, r_min: float, step: float = 1e-3) -> float:
    """Brute-force scan of the one-dimensional spread objective."""
    base = affine_image(obs.x, b1_c, b0_c)
    slack = obs.y.total_spread - base.total_spread
    l_lo = max(0.0, l_min - base.left_spread)
    l_hi = min(slack - max(0.0, r_min - base.right_spread), slack)
    assert l_hi >= l_lo - 1e-12, "scan called on an infeasible range"
    l_hi = max(l_hi, l_lo)
    ls = np.arange(l_lo, l_hi, step)
    ls = np.append(ls, l_hi)
    best = np.inf
    for left in ls:
        term = TrapezoidalFuzzyNumber(-float(left), 0.0, 0.0, max(0.0, slack - float(left)))
        best = min(best, discrepancy(obs.y, add(base, term)))
    return float(best)


def scan_uniform_baseline(data, b0_c: float, b1_c: float, points: int = 101) -> float:
    """Coarse 2-D scan of the shared-spread baseline objective."""
    bases = [affine_image(obs.x, b1_c, b0_c) for obs in data]
    cap = max(obs.y.total_spread for obs in data)
    if cap <= 0.0:
        grid = np.array([0.0])
    else:
        grid = np.linspace(0.0, cap, points)
    best = np.inf
    for left in grid:
        for right in grid:
            term = TrapezoidalFuzzyNumber(-float(left), 0.0, 0.0, float(right))
            total = sum(
                discrepancy(obs.y, add(base, term)) for obs, base in zip(data, bases)
            )
            best = min(best, total)
    return float(best)
