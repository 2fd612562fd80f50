"""How the extreme ranked designs compare with simple random sampling.

Two facts are on display. First, for a fixed design size the extreme
designs carry less uncertainty than SRS, so their measures sit strictly
above the SRS value. Second, each family of design measures increases
toward zero as the design size grows, and the growth rate is bounded by
the next product factor.
"""

import gwextropy as gx
from gwextropy.measures import MAX_RSSU, MIN_RSSU, PAST, RESIDUAL, SRS, MeasureSpec


def dominance_table(dist, weight, variant, design):
    print(f"{dist.label}, {weight.label}, {variant}: {design} vs SRS")
    print(f"{'n':>3} {design:>16} {'SRS':>16} {'margin':>12}")
    for n in (2, 3, 4, 5):
        better = gx.gw_design_measure(dist, weight, MeasureSpec(variant, design, n))
        base = gx.gw_design_measure(dist, weight, MeasureSpec(variant, SRS, n))
        print(f"{n:>3} {better:>16.3e} {base:>16.3e} {better - base:>12.3e}")
    print()


def growth_table(dist, weight, variant, design):
    values = [
        gx.gw_design_measure(dist, weight, MeasureSpec(variant, design, n))
        for n in range(1, 7)
    ]
    print(f"growth of {design} ({variant}) on {dist.label} with {weight.label}")
    print(f"{'n':>3} {'value':>16} {'ratio':>10} {'bound':>10}")
    for n, value in enumerate(values, start=1):
        if n == 1:
            print(f"{n:>3} {value:>16.3e}")
            continue
        ratio = value / values[n - 2]
        bound = 1.0 / (2 * (n - 1) + 3)
        print(f"{n:>3} {value:>16.3e} {ratio:>10.5f} {bound:>10.5f}")
    print()


def main():
    uniform = gx.uniform()
    w = gx.power_weight(1.0)

    dominance_table(uniform, w, PAST, MAX_RSSU)
    dominance_table(uniform, w, RESIDUAL, MIN_RSSU)
    dominance_table(gx.exponential(1.0), w, RESIDUAL, MIN_RSSU)

    growth_table(uniform, w, PAST, MAX_RSSU)
    growth_table(uniform, gx.power_weight(2.0), RESIDUAL, MIN_RSSU)


if __name__ == "__main__":
    main()
