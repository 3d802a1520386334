"""Acceptance gate: one test per shipped guarantee, at its stated tolerance.

Each test prints a single verdict line; the test name states the criterion.
"""

import contextlib
from pathlib import Path
from time import perf_counter

import numpy as np
import pytest

from nufreg import (
    FuzzyObservation,
    TrapezoidalFuzzyNumber,
    add,
    affine_image,
    alpha_cut,
    build_rule_base,
    coa_defuzzify,
    crisp_least_squares,
    discrepancy,
    estimate_coefficient_curves,
    fit_nonuniform,
    fit_uniform_baseline,
    membership,
    predict,
)
from nufreg.cli import main
from conftest import TABLE_ROWS, observations_from_rows
from oracles import quad_discrepancy, scan_spread_objective, vertex_bound

T = TrapezoidalFuzzyNumber


@contextlib.contextmanager
def verdict(num: int, summary: str):
    try:
        yield
    except BaseException:
        print(f"[criterion {num}] FAIL  {summary}")
        raise
    print(f"[criterion {num}] PASS  {summary}")


def estimated_response(obs, model, term):
    return add(affine_image(obs.x, model.b1_c, model.b0_c), term.as_trapezoid())


def test_criterion_1_spread_constraints(worked_data):
    with verdict(1, "spread equality within 1e-9, floors 0.5, fit under 1s"):
        t0 = perf_counter()
        model = fit_nonuniform(worked_data, alpha_levels=21)
        elapsed = perf_counter() - t0
        for obs, term in zip(worked_data, model.error_terms):
            est = estimated_response(obs, model, term)
            assert abs(est.total_spread - obs.y.total_spread) <= 1e-9
            assert est.left_spread >= 0.5 - 1e-9
            assert est.right_spread >= 0.5 - 1e-9
        assert elapsed < 1.0, f"fit took {elapsed:.2f}s"


def test_criterion_2_forced_spreads(worked_data, worked_model):
    with verdict(2, "terms 1-4 pinned at (0.5, 0.5); term 5 matches 1e-3 scan"):
        for term in worked_model.error_terms[:4]:
            assert (term.left, term.right) == (0.5, 0.5)
        term5 = worked_model.error_terms[4]
        assert abs(term5.left + term5.right - 5.0) <= 1e-9
        assert 0.5 - 1e-9 <= term5.left <= 4.5 + 1e-9
        best = scan_spread_objective(
            worked_data[4], worked_model.b0_c, worked_model.b1_c, 0.5, 0.5
        )
        assert worked_model.per_obs_discrepancy[4] <= best + 1e-3


def test_criterion_3_curve_bounds(worked_data):
    with verdict(3, "all 21-level bounds equal the vertex oracle; under 5s"):
        t0 = perf_counter()
        b0_est, b1_est = estimate_coefficient_curves(worked_data, alpha_levels=21)
        elapsed = perf_counter() - t0
        xcuts = tuple(alpha_cut(o.x, 0.0) for o in worked_data)
        for objective, est in (("intercept", b0_est), ("slope", b1_est)):
            for alpha, cut in est.curve.levels:
                ycuts = tuple(alpha_cut(o.y, alpha) for o in worked_data)
                assert abs(cut.lo - vertex_bound(xcuts, ycuts, objective, "min")) <= 1e-6
                assert abs(cut.hi - vertex_bound(xcuts, ycuts, objective, "max")) <= 1e-6
        support = b1_est.curve.support
        core = b1_est.curve.core
        assert abs(support.lo - 1.5) <= 1e-6 and abs(support.hi - 2.9) <= 1e-6
        assert abs(core.lo - 2.2) <= 1e-6 and abs(core.hi - 2.2) <= 1e-6
        assert elapsed < 5.0, f"curves took {elapsed:.2f}s"


def test_criterion_4_reference_report(tmp_path, capsys):
    with verdict(4, "report prints computed values beside the published columns"):
        csv_path = tmp_path / "table.csv"
        lines = ["x_l,x_m1,x_m2,x_r,y_l,y_m1,y_m2,y_r"]
        lines += [",".join(str(v) for v in row) for row in TABLE_ROWS]
        csv_path.write_text("\n".join(lines) + "\n")
        model_path = str(tmp_path / "table.nfm")
        assert main(["fit", "--input", str(csv_path), "--output", model_path]) == 0
        capsys.readouterr()
        assert main(["report", "--input", str(csv_path), "--model", model_path]) == 0
        out = capsys.readouterr().out
        for ref in ("0.456", "1.093", "0.789", "0.557", "1.586", "4.480"):
            assert ref in out, f"two-stage reference {ref} missing"
        for ref in ("0.356", "0.836", "0.000", "2.384"):
            assert ref in out, f"non-uniform reference {ref} missing"
        flagged = [ln for ln in out.splitlines() if ln.rstrip().endswith("*")]
        assert flagged, "no divergence flags printed"
        assert "flag * =" in out
        print(out)


def test_criterion_5_beats_uniform_baseline(worked_data, worked_model):
    with verdict(5, "non-uniform total beats the shared-term baseline"):
        _, _, base_total = fit_uniform_baseline(
            worked_data, worked_model.b0_c, worked_model.b1_c
        )
        assert worked_model.total_discrepancy < base_total


def test_criterion_6_randomized_property_suites():
    with verdict(6, "six 1000-case randomized suites; under 30s total"):
        t0 = perf_counter()
        rng = np.random.default_rng(20260815)

        def trapezoid(span=50.0):
            return T(*np.sort(rng.uniform(-span, span, size=4)))

        # alpha-cut nesting
        for _ in range(1000):
            f = trapezoid()
            a1, a2 = np.sort(rng.uniform(0.0, 1.0, size=2))
            wide, tight = alpha_cut(f, a1), alpha_cut(f, a2)
            assert wide.lo <= tight.lo + 1e-12 and wide.hi >= tight.hi - 1e-12

        # membership / alpha-cut round trip
        for _ in range(1000):
            f = trapezoid()
            alpha = float(rng.uniform(1e-6, 1.0))
            y = float(rng.uniform(f.l - 1.0, f.r + 1.0))
            cut = alpha_cut(f, alpha)
            mu = membership(f, y)
            if mu >= alpha + 1e-9:
                assert cut.lo - 1e-9 <= y <= cut.hi + 1e-9
            if cut.lo + 1e-9 <= y <= cut.hi - 1e-9:
                assert mu >= alpha - 1e-9

        # discrepancy: pseudometric axioms plus quadrature agreement
        for _ in range(1000):
            f, g, h = trapezoid(3.0), trapezoid(3.0), trapezoid(3.0)
            assert discrepancy(f, f) == 0.0
            d_fg = discrepancy(f, g)
            assert d_fg >= 0.0
            assert d_fg == discrepancy(g, f)
            assert discrepancy(f, h) <= d_fg + discrepancy(g, h) + 1e-9
            assert abs(d_fg - quad_discrepancy(f, g, step=2e-5)) <= 1e-4

        # COA symmetry
        for _ in range(1000):
            center = float(rng.uniform(-50.0, 50.0))
            w_sup = float(rng.uniform(0.0, 10.0))
            w_core = float(rng.uniform(0.0, 1.0)) * w_sup
            f = T(center - w_sup, center - w_core, center + w_core, center + w_sup)
            assert abs(coa_defuzzify(f) - center) <= 1e-6

        # affine_image ordering under negative scalars
        for _ in range(1000):
            f = trapezoid()
            a = -float(rng.uniform(0.01, 10.0))
            b = float(rng.uniform(-10.0, 10.0))
            g = affine_image(f, a, b)
            assert g.l <= g.m1 <= g.m2 <= g.r

        # all-crisp pipeline degenerates to ordinary least squares
        for _ in range(1000):
            n = int(rng.integers(2, 9))
            x = np.sort(rng.uniform(0.0, 10.0, size=n))
            if x[0] == x[-1]:
                x[-1] += 1.0
            y = rng.uniform(-5.0, 5.0, size=n)
            data = tuple(
                FuzzyObservation(T.crisp(float(a)), T.crisp(float(b)))
                for a, b in zip(x, y)
            )
            model = fit_nonuniform(data, alpha_levels=5)
            b0, b1 = crisp_least_squares(x, y)
            assert abs(model.b0_c - b0) <= 1e-9
            assert abs(model.b1_c - b1) <= 1e-9
            assert all(t.left == 0.0 and t.right == 0.0 for t in model.error_terms)

        elapsed = perf_counter() - t0
        assert elapsed < 30.0, f"property suites took {elapsed:.1f}s"


def test_criterion_7_forecast_invariants():
    with verdict(7, "forecast invariants over 200 fitted toy models; under 10s"):
        t0 = perf_counter()
        rng = np.random.default_rng(7)
        for _ in range(200):
            # responses spaced 10 apart with supports no wider than 3 per
            # side, so each crisp estimate lands in at most one support
            data = []
            for i, xv in enumerate((1.0, 2.0, 3.0), start=1):
                center = 10.0 * i + float(rng.uniform(-0.5, 0.5))
                lw = float(rng.uniform(1.5, 3.0))
                rw = float(rng.uniform(1.5, 3.0))
                data.append(
                    FuzzyObservation(T.crisp(xv), T(center - lw, center, center, center + rw))
                )
            data = tuple(data)
            model = fit_nonuniform(data, alpha_levels=5)
            rules = build_rule_base(model, data)

            # single fully activated rule: estimate sits inside one support
            j = int(rng.integers(0, 3))
            result = predict(model, rules, T.crisp(float(j + 1)))
            assert [i for i, _ in result.activations] == [j]
            term = model.error_terms[j]
            assert result.error_term.l == -term.left
            assert result.error_term.r == term.right

            # envelope containment for a fuzzy query
            x_new = T(*np.sort(rng.uniform(0.0, 4.0, size=4)))
            result = predict(model, rules, x_new)
            terms = [rules.rules[i].consequent for i, _ in result.activations]
            assert result.error_term.l >= min(-t.left for t in terms) - 1e-12
            assert result.error_term.r <= max(t.right for t in terms) + 1e-12

            # fallback weights normalize when the estimate is beyond all supports
            result = predict(model, rules, T.crisp(50.0))
            weights = [w for _, w in result.activations]
            assert len(weights) == 2
            assert abs(sum(weights) - 1.0) <= 1e-12

        elapsed = perf_counter() - t0
        assert elapsed < 10.0, f"forecast checks took {elapsed:.1f}s"


def test_criterion_8_deterministic_output(tmp_path, capsys):
    with verdict(8, "consecutive fits write byte-identical model files"):
        csv_path = tmp_path / "table.csv"
        lines = ["x_l,x_m1,x_m2,x_r,y_l,y_m1,y_m2,y_r"]
        lines += [",".join(str(v) for v in row) for row in TABLE_ROWS]
        csv_path.write_text("\n".join(lines) + "\n")
        first = tmp_path / "first.nfm"
        second = tmp_path / "second.nfm"
        for out in (first, second):
            code = main(
                ["fit", "--input", str(csv_path), "--seed", "0", "--output", str(out)]
            )
            assert code == 0
        capsys.readouterr()
        assert first.read_bytes() == second.read_bytes()
        assert first.stat().st_size > 0
