"""Numerical verification of the ordering theorems on the default suite.

Each report states which hypotheses were checked, whether the conclusion
held, and the signed margin. Reports whose hypotheses fail are flagged
rather than asserted; a gated failure would mean a conclusion failed
even though every hypothesis held cleanly.
"""

import math

import gwextropy as gx


def fmt(x):
    if math.isnan(x):
        return "nan"
    if math.isinf(x):
        return "+inf" if x > 0 else "-inf"
    return f"{x:+.3e}"


def main():
    reports = gx.run_theorem_suite()
    gated = [r for r in reports if r.gated_failure]
    flagged = [r for r in reports if not r.hypotheses_ok]
    inconclusive = [r for r in reports if r.inconclusive]

    print(f"{len(reports)} reports across {len(set(r.theorem_id for r in reports))} theorem ids")
    print()
    for r in reports:
        status = "pass" if r.passed else ("GATED FAIL" if r.gated_failure else "flagged")
        if r.inconclusive:
            status = "inconclusive"
        hyp = "".join("y" if h.passed else "n" for h in r.hypotheses_checked)
        print(
            f"{r.theorem_id:<12} {status:<12} margin={fmt(r.conclusion_margin):>10} "
            f"hyp[{hyp}] {r.subject}"
        )

    print()
    print(f"gated failures: {len(gated)}")
    print(f"reported beyond hypotheses: {len(flagged)}")
    print(f"inside tolerance band: {len(inconclusive)}")

    if flagged:
        print()
        print("example of a flagged report (hypothesis fails, conclusion only reported):")
        r = flagged[0]
        for h in r.hypotheses_checked:
            mark = "ok" if h.passed else "FAILS"
            margin = "" if h.margin is None else f" margin={fmt(h.margin)}"
            print(f"  {h.name}: {mark}{margin}")
        print(f"  conclusion margin {fmt(r.conclusion_margin)}; note: {r.note}")


if __name__ == "__main__":
    main()
