"""Classification of odd Taylor data into the three families that satisfy
the four-point identity, and synthesis of series from a classification.

Every odd entire solution of the identity is, for some alpha, beta:

    linear:    z * exp(alpha*z^2 + beta)
    trig:      sin(a*z) * exp(alpha*z^2 + beta),  a != 0
    elliptic:  sigma(z, Lambda) * exp(alpha*z^2 + beta)  for a lattice Lambda

The decision runs on the invariants of the input: mu undefined (p = q = 0)
means linear; mu within a configurable tolerance of 49/40 means trig (the
cusp value, where the j-inversion would diverge); anything else is
elliptic with j = 1728*mu/(mu - 49/40), tau recovered by inverting j, and
the argument scale recovered from the ratio of hat-form coefficients
against the reference lattice Z + tau*Z (a^4 from the degree-5 ratio, a^6
from the degree-7 ratio, with a consistency check; at the two degenerate
j-values one ratio is 0/0 and the other root is used alone, the root
choice there being a symmetry of the lattice).

Reported parameters follow fixed conventions: the scale a (and hence
1/rho) has Re > 0, or Im > 0 on the boundary Re = 0; beta is a principal
value, determined only modulo 2*pi*i; for elliptic results tau is reduced
and (rho, tau) identify the lattice only up to its unimodular basis
changes.  Flipping a to -a yields the same family member with beta
shifted by i*pi.
"""

from __future__ import annotations

import cmath
import math
from dataclasses import dataclass, field

import numpy as np

from .errors import DomainError, IdentityNotSatisfiedError
from .identity import extend_series
from .invariants import hat_normalize, pq_of_series
from .lattice import invert_j, reduce_tau
from .modular import TauPoint, theta1_odd_series, weierstrass_g
from .series import TruncatedOddSeries, gauss_twist, scale_argument

MU_TRIG = 49.0 / 40.0
TRIG_TOLERANCE = 1e-8
VALIDATION_TOLERANCE = 1e-6

# Relative agreement demanded between the degree-5 and degree-7 scale
# recoveries, |(a^2)^2 / a^4 - 1|, away from the degenerate j-values.
_RATIO_CONSISTENCY_TOL = 1e-4

# j-windows treated as the degenerate values 0 and 1728.
_J_CORNER_TOL = 1e-6
_J_SQUARE_TOL = 1e-6

_SIGN_NOTE = (
    "a normalized to Re(a) > 0 (Im(a) > 0 when Re(a) = 0); "
    "-a gives the same member with beta shifted by i*pi"
)


@dataclass(frozen=True)
class Classification:
    """Tagged family member: case in {'linear', 'trig', 'elliptic'}."""

    case: str
    alpha: complex
    beta: complex
    a: complex | None = None
    rho: complex | None = None
    tau: TauPoint | None = None
    diagnostics: dict = field(default_factory=dict)

    def __post_init__(self):
        if self.case not in ("linear", "trig", "elliptic"):
            raise DomainError(f"unknown case {self.case!r}")
        if self.case == "trig" and (self.a is None or self.a == 0):
            raise DomainError("trig classification requires a nonzero scale a")
        if self.case == "elliptic" and (self.rho is None or self.tau is None):
            raise DomainError("elliptic classification requires rho and tau")

    def to_json_dict(self) -> dict:
        doc = {
            "case": self.case,
            "alpha": [self.alpha.real, self.alpha.imag],
            "beta": [self.beta.real, self.beta.imag],
        }
        if self.a is not None:
            doc["a"] = [self.a.real, self.a.imag]
        if self.rho is not None:
            doc["rho"] = [self.rho.real, self.rho.imag]
        if self.tau is not None:
            doc["tau"] = [self.tau.value.real, self.tau.value.imag]
        doc["diagnostics"] = dict(self.diagnostics)
        return doc


def _principal_root(value: complex, order: int) -> complex:
    """Principal order-th root; lands in the sector |arg| <= pi/order."""
    if value == 0:
        raise IdentityNotSatisfiedError("degenerate scale recovery (zero ratio)")
    return cmath.exp(cmath.log(value) / order)


def _sign_normalize(a: complex) -> complex:
    if a.real < 0 or (a.real == 0 and a.imag < 0):
        return -a
    return a


def _sigma_reference_coefficients(tau: TauPoint) -> tuple[complex, complex]:
    """Degree-5/7 Taylor coefficients of sigma(., Z + tau*Z)."""
    g2, g3 = weierstrass_g(tau)
    return -g2 / 240.0, -g3 / 840.0


def classify(s: TruncatedOddSeries, *, trig_tolerance: float = TRIG_TOLERANCE,
             validation_tolerance: float = VALIDATION_TOLERANCE) -> Classification:
    """Identify the family of an odd series and recover its parameters.

    Input must carry a1 != 0 and coefficients through degree 7.  If data
    beyond degree 7 is present it is validated against the duplication
    extension of the recovered member; a mismatch raises
    IdentityNotSatisfiedError, since degree-7 data alone is always
    realizable but higher coefficients are forced.
    """
    inv = pq_of_series(s)
    hat = hat_normalize(s)
    diagnostics = dict(inv.to_json_dict())
    diagnostics["sign_convention"] = _SIGN_NOTE

    if inv.mu.tag == "undefined":
        result = Classification(
            case="linear",
            alpha=-hat.alpha,
            beta=hat.beta,
            diagnostics=diagnostics,
        )
    else:
        big_a = hat.series.coefficient(5)
        big_b = hat.series.coefficient(7)
        p_hat = -2.0 * big_a
        q_hat = 3.0 * big_b
        is_trig = (
            inv.mu.tag == "finite"
            and abs(inv.mu.value - MU_TRIG) <= trig_tolerance * MU_TRIG
        )
        if is_trig:
            a_sq = -21.0 * q_hat / (2.0 * p_hat)
            a = _sign_normalize(cmath.sqrt(a_sq))
            result = Classification(
                case="trig",
                alpha=a_sq / 6.0 - hat.alpha,
                beta=hat.beta - cmath.log(a),
                a=a,
                diagnostics=diagnostics,
            )
        else:
            if inv.mu.tag == "infinity":
                j = 1728.0 + 0.0j
            else:
                j = 1728.0 * inv.mu.value / (inv.mu.value - MU_TRIG)
            tau, _ = reduce_tau(invert_j(j))
            ref_a, ref_b = _sigma_reference_coefficients(tau)
            diagnostics["j"] = [j.real, j.imag]
            if abs(j) <= _J_CORNER_TOL:
                # g2(tau) = 0: only the degree-7 ratio carries information;
                # sixth roots of unity are lattice symmetries here.
                a = _principal_root(big_b / ref_b, 6)
            elif abs(j - 1728.0) <= _J_SQUARE_TOL * 1728.0:
                # g3(tau) = 0: degree-5 ratio only; fourth roots of unity
                # are lattice symmetries here.
                a = _principal_root(big_a / ref_a, 4)
            else:
                a_fourth = big_a / ref_a
                a_sixth = big_b / ref_b
                a_sq = a_sixth / a_fourth
                mismatch = abs(a_sq * a_sq / a_fourth - 1.0)
                diagnostics["scale_ratio_consistency"] = mismatch
                if mismatch > _RATIO_CONSISTENCY_TOL:
                    raise IdentityNotSatisfiedError(
                        "degree-5 and degree-7 data disagree about the "
                        f"argument scale (relative mismatch {mismatch:.3e})"
                    )
                a = cmath.sqrt(a_sq)
            a = _sign_normalize(a)
            result = Classification(
                case="elliptic",
                alpha=-hat.alpha,
                beta=hat.beta,
                rho=1.0 / a,
                tau=tau,
                diagnostics=diagnostics,
            )

    if s.max_degree > 7:
        _validate_tail(s, result, validation_tolerance)
    return result


def _validate_tail(s: TruncatedOddSeries, c: Classification, tolerance: float):
    """Check coefficients beyond degree 7 against the forced extension."""
    candidate = synthesize(c, 7)
    extended = extend_series(candidate, s.max_degree)
    got = s.odd_coefficients
    want = extended.odd_coefficients
    scale = max(float(np.max(np.abs(got))), float(np.max(np.abs(want))))
    for k in range(4, got.size):
        err = abs(got[k] - want[k])
        if err > tolerance * scale:
            raise IdentityNotSatisfiedError(
                f"coefficient at degree {2 * k + 1} is {got[k]}, but the "
                f"identity forces {want[k]} (|diff| = {err:.3e}, "
                f"tolerance {tolerance:.1e} * {scale:.3e})"
            )


def synthesize(c: Classification, max_degree: int) -> TruncatedOddSeries:
    """Odd series of the classified family member through max_degree.

    linear:    twist of z;
    trig:      sine Taylor series with argument scale a, then twist;
    elliptic:  theta series at tau, argument scale 1/rho, the gauge twist
               fixing sigma'(0) = 1 and a vanishing cubic term, then the
               classification's own twist.
    """
    if max_degree < 1 or max_degree % 2 == 0:
        raise DomainError("max_degree must be an odd integer >= 1")
    count = (max_degree + 1) // 2
    if c.case == "linear":
        base = TruncatedOddSeries([1.0] + [0.0] * (count - 1))
        return gauss_twist(base, c.alpha, c.beta)
    if c.case == "trig":
        sine = TruncatedOddSeries(
            [(-1.0) ** k / math.factorial(2 * k + 1) for k in range(count)]
        )
        return gauss_twist(scale_argument(sine, c.a), c.alpha, c.beta)
    theta = theta1_odd_series(c.tau, max_degree)
    scaled = scale_argument(theta, 1.0 / c.rho)
    lead = scaled.odd_coefficients[0]
    cubic = scaled.odd_coefficients[1]
    gauge_alpha = -cubic / lead
    gauge_beta = -cmath.log(lead)
    return gauss_twist(scaled, gauge_alpha + c.alpha, gauge_beta + c.beta)
