"""Taylor-coefficient invariants of odd functions.

For an odd entire function f = a1*z + a3*z^3 + a5*z^5 + a7*z^7 + ...
with a1 != 0, define

    p(f) = a3^2 - 2*a1*a5,
    q(f) = 3*a1^2*a7 - 3*a1*a3*a5 + a3^3,
    mu(f) = p(f)^3 / q(f)^2   as a point of the projective line.

mu is invariant under the substitution z -> a*z (a != 0) and under
multiplication by exp(alpha*z^2 + beta); p and q themselves are invariant
under the exponential factor with alpha only, and transform as
p -> a1^2 * a^4 * p, q -> a1^3 * a^6 * q under rescalings.  These exact
homogeneities drive both the classifier and the zero-detection thresholds
below.

Hat normalization strips the gauge: every admissible f can be written
f(z) = h(z) * exp(-alpha*z^2 + beta) where h = z + A*z^5 + B*z^7 + ... has
unit leading coefficient and no cubic term.  Then p(h) = -2*A and
q(h) = 3*B.
"""

from __future__ import annotations

import cmath
from dataclasses import dataclass

import numpy as np

from .errors import DomainError, NotInOmegaError
from .series import TruncatedOddSeries, gauss_twist

# Relative threshold below which p or q counts as exactly zero, measured
# against the scale powers described in mu_of_pq.
ZERO_TOL = 1e-12


@dataclass(frozen=True)
class ProjectiveValue:
    """A point of the projective line: finite, infinity, or undefined (0/0)."""

    tag: str
    value: complex | None = None

    def __post_init__(self):
        if self.tag not in ("finite", "infinity", "undefined"):
            raise DomainError(f"unknown projective tag {self.tag!r}")
        if (self.tag == "finite") != (self.value is not None):
            raise DomainError("finite values carry a number; others do not")

    @classmethod
    def finite(cls, value: complex) -> "ProjectiveValue":
        return cls("finite", complex(value))

    @classmethod
    def infinity(cls) -> "ProjectiveValue":
        return cls("infinity")

    @classmethod
    def undefined(cls) -> "ProjectiveValue":
        return cls("undefined")

    @property
    def is_finite(self) -> bool:
        return self.tag == "finite"

    def to_json_dict(self) -> dict:
        doc = {"tag": self.tag}
        if self.is_finite:
            doc["value"] = [self.value.real, self.value.imag]
        return doc


@dataclass(frozen=True)
class InvariantData:
    p: complex
    q: complex
    mu: ProjectiveValue

    def to_json_dict(self) -> dict:
        return {
            "p": [self.p.real, self.p.imag],
            "q": [self.q.real, self.q.imag],
            "mu": self.mu.to_json_dict(),
        }


@dataclass(frozen=True)
class HatForm:
    """Gauge-normalized series plus the stripped parameters.

    ``series`` has leading coefficient exactly 1 and no cubic term, and the
    original input satisfies input(z) = series(z) * exp(-alpha*z^2 + beta),
    i.e. alpha = -a3/a1 and beta = log(a1) (principal branch; the original
    beta is recoverable only modulo 2*pi*i).
    """

    series: TruncatedOddSeries
    alpha: complex
    beta: complex


def mu_of_pq(p: complex, q: complex, *, p_scale: float | None = None,
             q_scale: float | None = None) -> ProjectiveValue:
    """Projective ratio p^3/q^2 with scale-aware zero detection.

    p and q are homogeneous of degrees (2, 4) and (3, 6) in the leading
    coefficient and the argument scale, so "zero" must be judged against a
    4th and a 6th power of a characteristic scale.  When no scales are
    supplied they are inferred from the pair itself:
    s = max(|p|^(1/4), |q|^(1/6)), p_scale = s^4, q_scale = s^6.
    """
    p = complex(p)
    q = complex(q)
    if p_scale is None or q_scale is None:
        s = max(abs(p) ** 0.25, abs(q) ** (1.0 / 6.0))
        p_scale = s**4
        q_scale = s**6
    p_zero = abs(p) <= ZERO_TOL * p_scale
    q_zero = abs(q) <= ZERO_TOL * q_scale
    if p_zero and q_zero:
        return ProjectiveValue.undefined()
    if q_zero:
        return ProjectiveValue.infinity()
    return ProjectiveValue.finite(p**3 / q**2)


def hat_normalize(s: TruncatedOddSeries) -> HatForm:
    """Strip the exp(alpha*z^2 + beta) gauge from an odd series.

    Requires a1 != 0 and data through degree 7.  The returned series has
    a1 = 1 exactly and a3 snapped to zero (the twist annihilates it up to
    roundoff, which is asserted before snapping).
    """
    if s.max_degree < 7:
        raise DomainError("hat normalization needs coefficients through degree 7")
    a1 = s.leading
    if a1 == 0:
        raise NotInOmegaError("leading odd coefficient vanishes")
    alpha = -s.coefficient(3) / a1
    twisted = gauss_twist(s, alpha, 0.0)
    coeffs = np.array(twisted.odd_coefficients) / a1
    scale = float(np.max(np.abs(coeffs)))
    assert abs(coeffs[0] - 1.0) <= 64 * np.finfo(float).eps
    assert abs(coeffs[1]) <= 1e-12 * max(scale, 1.0)
    coeffs[0] = 1.0
    coeffs[1] = 0.0
    return HatForm(series=TruncatedOddSeries(coeffs), alpha=complex(alpha),
                   beta=cmath.log(a1))


def pq_of_series(s: TruncatedOddSeries) -> InvariantData:
    """Invariants (p, q, mu) of an odd series with a1 != 0.

    p and q are evaluated exactly from a1, a3, a5, a7.  The projective tag
    of mu uses thresholds scaled by the hat form: with A and B the degree-5
    and degree-7 hat coefficients and t = max(1, |A|^(1/4), |B|^(1/6)),
    p counts as zero below ZERO_TOL * |a1|^2 * t^4 and q below
    ZERO_TOL * |a1|^3 * t^6, matching their exact homogeneities.
    """
    if s.max_degree < 7:
        raise DomainError("invariants need coefficients through degree 7")
    a1 = s.leading
    if a1 == 0:
        raise NotInOmegaError("leading odd coefficient vanishes")
    a3 = s.coefficient(3)
    a5 = s.coefficient(5)
    a7 = s.coefficient(7)
    p = a3 * a3 - 2.0 * a1 * a5
    q = 3.0 * a1 * a1 * a7 - 3.0 * a1 * a3 * a5 + a3 * a3 * a3
    hat = hat_normalize(s)
    big_a = abs(hat.series.coefficient(5))
    big_b = abs(hat.series.coefficient(7))
    t = max(1.0, big_a ** 0.25, big_b ** (1.0 / 6.0))
    mu = mu_of_pq(
        p,
        q,
        p_scale=abs(a1) ** 2 * t**4,
        q_scale=abs(a1) ** 3 * t**6,
    )
    return InvariantData(p=p, q=q, mu=mu)
