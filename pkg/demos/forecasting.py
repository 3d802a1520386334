"""Rule-based forecasting from a fitted model.

Each observation becomes one rule: the observed response is the premise,
the fitted error term the consequent. A new input activates rules by how
well its crisp estimate matches the observed responses, and the blended
error term widens the forecast where the data was vague.
"""

from nufreg import TrapezoidalFuzzyNumber, build_rule_base, fit_nonuniform, predict

from coefficient_curves import load


def show(result):
    print(f"  crisp core estimate: {result.crisp_core:.4f}")
    weights = "  ".join(f"rule {i + 1}: {w:.3f}" for i, w in result.activations)
    print(f"  activations: {weights}")
    e = result.error_term
    print(f"  error term:  ({e.l:.3f}, {e.m1:.3f}, {e.m2:.3f}, {e.r:.3f})")
    r = result.response
    print(f"  response:    ({r.l:.3f}, {r.m1:.3f}, {r.m2:.3f}, {r.r:.3f})")
    print()


if __name__ == "__main__":
    data = load()
    model = fit_nonuniform(data, alpha_levels=21)
    rules = build_rule_base(model, data)

    print("forecast at x = 5 (seen during fitting):")
    show(predict(model, rules, TrapezoidalFuzzyNumber.crisp(5.0)))

    print("forecast at x = 4.2 (two rules share the activation):")
    show(predict(model, rules, TrapezoidalFuzzyNumber.crisp(4.2)))

    print("forecast at fuzzy x = (5.5, 6, 6, 6.5) (extrapolating):")
    show(predict(model, rules, TrapezoidalFuzzyNumber(5.5, 6.0, 6.0, 6.5)))
