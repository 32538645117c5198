#!/usr/bin/env python3
"""Demonstrate that the duplication equation

    f'(0)^3 f(2z) = f^3 f''' - 3 f^2 f' f'' + 2 f (f')^3

pins every odd Taylor coefficient beyond degree 7.  The linearization of
the degree-n residual in a_n has slope -a1^3 * psi(n) with
psi(n) = (n-1)(n-2)(n-3) + 8 - 2^n, nonzero for odd n >= 9, so degree-7
data extends uniquely.  We extend theta-series data and compare against
the coefficients computed independently from the q-series.
"""

from sigmakit import extend_series, psi, theta1_odd_series, TruncatedOddSeries

print("== The recurrence coefficient psi ==")
for n in range(5, 16, 2):
    print(f"  psi({n:2d}) = {psi(n)}")
print("  zero at 5 and 7 (free data), nonzero ever after (forced data)")

print("\n== Extending theta1(., i) Taylor data from degree 7 to 13 ==")
data = theta1_odd_series(1j, 7)
extended = extend_series(data, 13)
reference = theta1_odd_series(1j, 13)
print(f"  {'degree':>6} {'recurrence':>24} {'q-series':>24} {'rel err':>10}")
for k in range(7):
    degree = 2 * k + 1
    got = extended.odd_coefficients[k]
    ref = reference.odd_coefficients[k]
    rel = abs(got - ref) / abs(ref)
    print(f"  {degree:>6} {got.real:>24.16g} {ref.real:>24.16g} {rel:>10.2e}")

print("\n== A non-solution is forced away from its own data ==")
cubic = TruncatedOddSeries([1, 1, 0, 0])
forced = extend_series(cubic, 9)
print(f"  z + z^3 has a9 = 0, but the equation forces a9 = {forced.coefficient(9).real}")
print("  (= 1/28; this mismatch is how the classifier rejects it)")
