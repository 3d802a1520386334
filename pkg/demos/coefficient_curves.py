"""Membership curves of the regression coefficients on the worked dataset.

Each alpha level is a small box-constrained optimization over the
observation cuts; the printed lo/hi columns are the resulting bounds.
"""

from nufreg import FuzzyObservation, TrapezoidalFuzzyNumber, estimate_coefficient_curves

ROWS = (
    (1.0, (2.0, 2.5, 2.5, 3.0)),
    (2.0, (5.0, 5.5, 5.5, 6.0)),
    (3.0, (6.0, 6.5, 6.5, 7.0)),
    (4.0, (9.0, 9.5, 9.5, 10.0)),
    (5.0, (9.0, 11.5, 11.5, 14.0)),
)


def load():
    return tuple(
        FuzzyObservation(TrapezoidalFuzzyNumber.crisp(x), TrapezoidalFuzzyNumber(*y))
        for x, y in ROWS
    )


if __name__ == "__main__":
    data = load()
    b0_est, b1_est = estimate_coefficient_curves(data, alpha_levels=11)

    for name, est in (("intercept b0", b0_est), ("slope b1", b1_est)):
        print(name)
        print("  alpha     lo        hi")
        for alpha, cut in est.curve.levels:
            print(f"  {alpha:5.2f}  {cut.lo:8.4f}  {cut.hi:8.4f}")
        print(f"  crisp (center of area): {est.crisp:.6g}")
        print()
