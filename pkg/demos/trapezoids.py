"""Tour of the trapezoidal number type: cuts, arithmetic, defuzzification."""

from nufreg import (
    TrapezoidalFuzzyNumber,
    add,
    affine_image,
    alpha_cut,
    coa_defuzzify,
    discrepancy,
    membership,
)


def ascii_plot(f, lo, hi, width=61):
    ys = [lo + (hi - lo) * i / (width - 1) for i in range(width)]
    marks = ".:-=+*#%@"
    row = []
    for y in ys:
        mu = membership(f, y)
        row.append(" " if mu == 0.0 else marks[min(int(mu * len(marks)), len(marks) - 1)])
    return "".join(row)


if __name__ == "__main__":
    f = TrapezoidalFuzzyNumber(2.0, 2.5, 2.5, 3.0)
    g = TrapezoidalFuzzyNumber(9.0, 11.5, 11.5, 14.0)

    print("f =", f)
    print("g =", g)
    print()

    for alpha in (0.0, 0.5, 1.0):
        cut = alpha_cut(g, alpha)
        print(f"alpha={alpha:.1f}  cut of g = [{cut.lo:.2f}, {cut.hi:.2f}]")
    print()

    print("membership of g at 10.0:", membership(g, 10.0))
    print("center of area of g:   ", coa_defuzzify(g))
    print()

    # arithmetic stays trapezoidal
    h = add(affine_image(f, 2.0, 1.0), g)
    print("2*f + 1 + g =", h)
    print()

    print("discrepancy(f, g) =", f"{discrepancy(f, g):.6g}")
    print("discrepancy(f, f) =", discrepancy(f, f))
    print()

    lo, hi = f.l - 0.5, g.r + 0.5
    print("f:", ascii_plot(f, lo, hi))
    print("g:", ascii_plot(g, lo, hi))
