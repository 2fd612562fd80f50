"""Tour of the analytic measures: quadrature values against closed forms.

Walks the registered families with power weights and prints, for each
variant and design, the quadrature value, the closed form when one is
registered, and the gap between the two.
"""

import gwextropy as gx
from gwextropy.measures import MAX_RSSU, MIN_RSSU, PAST, RESIDUAL, SRS, MeasureSpec


def show(dist, weight, spec):
    report = gx.measure_report(dist, weight, spec)
    known = gx.closed_form(dist, weight, spec)
    gap = "" if known is None else f"  gap={abs(report.value - known):.2e}"
    cf = "" if known is None else f"  closed={known:+.10f}"
    print(
        f"{dist.label:<18} {weight.label:<10} {spec.variant:<8} "
        f"{spec.design:<7} n={spec.n}  value={report.value:+.10f}{cf}{gap}"
    )


def main():
    uniform = gx.uniform()
    expo = gx.exponential(1.0)
    psurv = gx.power_survival(2.0)

    print("single-observation measures")
    for dist in (uniform, expo, psurv):
        for m in (1.0, 2.0):
            w = gx.power_weight(m)
            for variant in (PAST, RESIDUAL):
                try:
                    show(dist, w, MeasureSpec(variant, "single", 1))
                except gx.DivergenceError:
                    print(
                        f"{dist.label:<18} {w.label:<10} {variant:<8} "
                        "single  n=1  diverges"
                    )

    print()
    print("design measures, n = 3")
    w = gx.power_weight(2.0)
    show(uniform, w, MeasureSpec(PAST, SRS, 3))
    show(uniform, w, MeasureSpec(PAST, MAX_RSSU, 3))
    show(uniform, w, MeasureSpec(RESIDUAL, MIN_RSSU, 3))
    show(expo, w, MeasureSpec(RESIDUAL, MIN_RSSU, 3))
    show(psurv, w, MeasureSpec(RESIDUAL, MIN_RSSU, 3))

    print()
    print("weights other than powers have no registered closed form")
    show(uniform, gx.exp_decay_weight(1.0), MeasureSpec(PAST, SRS, 2))
    show(expo, gx.exp_decay_weight(0.5), MeasureSpec(RESIDUAL, MIN_RSSU, 2))


if __name__ == "__main__":
    main()
