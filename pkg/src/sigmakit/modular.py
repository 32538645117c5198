"""q-series evaluation of modular objects on the upper half-plane.

Implements the first Jacobi theta function theta1(z, tau), its odd Taylor
coefficients in z, the Dedekind eta function, the weight-4 and weight-6
forms g2(tau) and g3(tau), the modular invariant j(tau), and the pair

    p(tau) = (pi^2/30) * eta^6 * g2,
    q(tau) = -(pi^3/35) * eta^9 * g3,

which are the degree-5/7 Taylor invariants of theta1 (see ``invariants``).

All sums and products use an adaptive cutoff: terms are accumulated until
the next term's magnitude drops below ``TERM_TOL`` times the current
partial magnitude, with a hard cap of ``TERM_CAP`` terms.  Inside the
fundamental domain |q| <= exp(-pi*sqrt(3)) and a handful of terms suffice;
far outside it the cap is reached and a ConvergenceError is raised.
Callers are expected to reduce tau first (see ``lattice.reduce_tau``);
these routines evaluate tau exactly as given so that the modular
transformation laws remain observable.
"""

from __future__ import annotations

import cmath
import math
from dataclasses import dataclass

import numpy as np

from .errors import ConvergenceError, DomainError, NumericError
from .series import TruncatedOddSeries

TERM_TOL = 1e-18
TERM_CAP = 200

_TWO_PI = 2.0 * math.pi


@dataclass(frozen=True)
class TauPoint:
    """A point of the open upper half-plane."""

    value: complex

    def __post_init__(self):
        v = complex(self.value)
        if not (math.isfinite(v.real) and math.isfinite(v.imag)):
            raise DomainError("tau must be finite")
        if v.imag <= 0.0:
            raise DomainError(f"tau must satisfy Im(tau) > 0, got {v}")
        # Flush negative zero in the real part for tidy reporting.
        object.__setattr__(self, "value", complex(v.real + 0.0, v.imag))


def as_tau(tau) -> TauPoint:
    """Accept a TauPoint or a bare complex number."""
    if isinstance(tau, TauPoint):
        return tau
    return TauPoint(complex(tau))


@dataclass(frozen=True)
class Nome:
    """The exponentials exp(pi*i*tau) and exp(2*pi*i*tau)."""

    q_half: complex
    q_full: complex

    @classmethod
    def from_tau(cls, tau) -> "Nome":
        t = as_tau(tau).value
        qh = cmath.exp(1j * math.pi * t)
        return cls(q_half=qh, q_full=qh * qh)


def _cap_error(what, tau, partial, last_term, cap):
    return ConvergenceError(
        f"{what} did not converge within {cap} terms at tau={tau}; "
        "reduce tau toward the fundamental domain first",
        diagnostics={
            "tau": [tau.real, tau.imag],
            "term_cap": cap,
            "partial_magnitude": abs(partial),
            "last_term_magnitude": abs(last_term),
        },
    )


def theta1_eval(z: complex, tau, *, term_cap: int = TERM_CAP) -> complex:
    """First Jacobi theta function.

    theta1(z, tau) = 2 * sum_{n>=0} (-1)^n exp(pi*i*tau*(n+1/2)^2)
                                     * sin((2n+1)*pi*z)
    """
    t = as_tau(tau).value
    z = complex(z)
    total = 0.0 + 0.0j
    term = 0.0 + 0.0j
    for n in range(term_cap):
        term = (
            2.0
            * (-1) ** n
            * cmath.exp(1j * math.pi * t * (n + 0.5) ** 2)
            * cmath.sin((2 * n + 1) * math.pi * z)
        )
        total += term
        if abs(term) <= TERM_TOL * abs(total):
            return total
    raise _cap_error("theta1 series", t, total, term, term_cap)


def theta1_odd_series(tau, max_degree: int, *, term_cap: int = TERM_CAP) -> TruncatedOddSeries:
    """Odd Taylor coefficients of z -> theta1(z, tau) through max_degree.

    a_(2k+1) = 2 * sum_{n>=0} (-1)^n exp(pi*i*tau*(n+1/2)^2)
                               * (-1)^k ((2n+1)*pi)^(2k+1) / (2k+1)!

    Inside the fundamental domain the truncation error is far below 1e-14
    relative per coefficient.
    """
    if max_degree < 1 or max_degree % 2 == 0:
        raise DomainError("max_degree must be an odd integer >= 1")
    t = as_tau(tau).value
    ks = np.arange((max_degree + 1) // 2)
    sine_coeffs = np.array(
        [(-1.0) ** k / math.factorial(2 * k + 1) for k in ks], dtype=complex
    )
    partial = np.zeros(ks.size, dtype=complex)
    term = np.zeros(ks.size, dtype=complex)
    for n in range(term_cap):
        gauss = 2.0 * (-1) ** n * cmath.exp(1j * math.pi * t * (n + 0.5) ** 2)
        odd_powers = ((2 * n + 1) * math.pi) ** (2 * ks + 1)
        term = gauss * sine_coeffs * odd_powers
        partial += term
        if np.all(np.abs(term) <= TERM_TOL * np.abs(partial)):
            return TruncatedOddSeries(partial)
    raise _cap_error("theta1 coefficient series", t, partial[0], term[0], term_cap)


def dedekind_eta(tau, *, term_cap: int = TERM_CAP) -> complex:
    """Dedekind eta, eta(tau) = exp(pi*i*tau/12) * prod_{n>=1} (1 - q^n)."""
    t = as_tau(tau).value
    q = Nome.from_tau(t).q_full
    prod = cmath.exp(1j * math.pi * t / 12.0)
    qn = 1.0 + 0.0j
    for _ in range(term_cap):
        qn *= q
        prod *= 1.0 - qn
        if abs(qn) <= TERM_TOL:
            return prod
    raise _cap_error("eta product", t, prod, qn, term_cap)


def weierstrass_g(tau, *, term_cap: int = TERM_CAP) -> tuple[complex, complex]:
    """Weight-4 and weight-6 modular forms of the lattice Z + tau*Z.

    g2 = (2*pi)^4 * (1/12  + 20    * sum_{n>=1} n^3 * q^n / (1 - q^n))
    g3 = (2*pi)^6 * (1/216 - (7/3) * sum_{n>=1} n^5 * q^n / (1 - q^n))

    with q = exp(2*pi*i*tau).  The summand n^k * q^n / (1 - q^n) equals
    n^k / (q^(-n) - 1), written here in the form that never overflows.
    """
    t = as_tau(tau).value
    q = Nome.from_tau(t).q_full
    s3 = 1.0 / 12.0 + 0.0j
    s5 = 1.0 / 216.0 + 0.0j
    qn = 1.0 + 0.0j
    t3 = 0.0 + 0.0j
    for n in range(1, term_cap + 1):
        qn *= q
        base = qn / (1.0 - qn)
        t3 = 20.0 * n**3 * base
        t5 = -(7.0 / 3.0) * n**5 * base
        s3 += t3
        s5 += t5
        if abs(t3) <= TERM_TOL * abs(s3) and abs(t5) <= TERM_TOL * abs(s5):
            return (_TWO_PI**4 * s3, _TWO_PI**6 * s5)
    raise _cap_error("g2/g3 series", t, s3, t3, term_cap)


def modular_discriminant(tau, *, term_cap: int = TERM_CAP) -> complex:
    """Discriminant g2^3 - 27*g3^2, evaluated as (2*pi)^12 * eta(tau)^24.

    The product form is used because the direct subtraction loses all
    significance high in the upper half-plane, where g2^3 and 27*g3^2
    agree to many digits; the two expressions are equal identically.
    """
    return _TWO_PI**12 * dedekind_eta(tau, term_cap=term_cap) ** 24


def j_invariant(tau, *, term_cap: int = TERM_CAP) -> complex:
    """Modular invariant, normalized as j = 1728 * g2^3 / (g2^3 - 27*g3^2).

    This normalization has the Fourier expansion 1/q + 744 + 196884*q + ...
    """
    g2, _ = weierstrass_g(tau, term_cap=term_cap)
    delta = modular_discriminant(tau, term_cap=term_cap)
    if delta == 0:
        # Impossible for Im(tau) > 0 at working precision.
        raise NumericError(
            "vanishing discriminant in j evaluation (internal fault)",
            diagnostics={"tau": [as_tau(tau).value.real, as_tau(tau).value.imag]},
        )
    return 1728.0 * g2**3 / delta


def modular_pq(tau, *, term_cap: int = TERM_CAP) -> tuple[complex, complex]:
    """The pair (p, q) = ((pi^2/30) eta^6 g2, -(pi^3/35) eta^9 g3).

    These equal the invariants p and q of the odd Taylor series of
    z -> theta1(z, tau), computed by ``invariants.pq_of_series``; the
    test suite checks the equality on a tau grid at 1e-8 relative.
    """
    e = dedekind_eta(tau, term_cap=term_cap)
    g2, g3 = weierstrass_g(tau, term_cap=term_cap)
    p = (math.pi**2 / 30.0) * e**6 * g2
    q = -(math.pi**3 / 35.0) * e**9 * g3
    return p, q
