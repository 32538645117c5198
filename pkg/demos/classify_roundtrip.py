#!/usr/bin/env python3
"""Build one member of each solution family, hand the classifier nothing
but odd Taylor coefficients through degree 9, and compare what it
recovers against the construction parameters.
"""

import json

from sigmakit import Classification, TauPoint, classify, synthesize


def fmt(z):
    return f"{z.real:+.10f}{z.imag:+.10f}i" if z is not None else "-"


MEMBERS = [
    Classification(case="linear", alpha=0.4 - 0.2j, beta=0.3 + 0.1j),
    Classification(case="trig", alpha=-0.15 + 0.05j, beta=0.2j, a=1.3 + 0.25j),
    Classification(
        case="elliptic",
        alpha=0.1 + 0.3j,
        beta=-0.25,
        rho=1.1 - 0.2j,
        tau=TauPoint(0.3 + 1.2j),
    ),
]

for made in MEMBERS:
    series = synthesize(made, 9)
    got = classify(series)
    print(f"== {made.case} ==")
    print(f"  coefficients handed over: {[f'{c:.6g}' for c in series.odd_coefficients]}")
    print(f"  case recovered:  {got.case}")
    print(f"  alpha: made {fmt(made.alpha)}   got {fmt(got.alpha)}")
    print(f"  beta:  made {fmt(made.beta)}   got {fmt(got.beta)}")
    if made.case == "trig":
        print(f"  a:     made {fmt(made.a)}   got {fmt(got.a)}")
    if made.case == "elliptic":
        print(f"  rho:   made {fmt(made.rho)}   got {fmt(got.rho)}")
        print(f"  tau:   made {fmt(made.tau.value)}   got {fmt(got.tau.value)}")
    print()

print("== Classification document for the elliptic member ==")
print(json.dumps(classify(synthesize(MEMBERS[2], 9)).to_json_dict(), indent=2))
