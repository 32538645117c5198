"""Lattice normalization, fundamental-domain reduction, j-inversion,
and evaluation of the Weierstrass sigma function.

A lattice is presented by a generator pair (omega1, omega2) and normalized
to the form rho * (Z + tau*Z) with tau in the fundamental domain of the
modular group.  Convention for the domain: Re(tau) in [-1/2, 1/2),
|tau| >= 1, and Re(tau) <= 0 on the unit circle; boundary ties are
resolved deterministically.

sigma(z, Lambda) is evaluated through the theta route

    sigma(z, Lambda) = theta1(z / rho, tau) * exp(alpha*z^2 + beta),

where (alpha, beta) is fixed by the normalization sigma'(0) = 1 and a
vanishing z^3 coefficient:

    beta  = log(rho / theta1'(0, tau)),
    alpha = -theta1'''(0, tau) / (6 * rho^2 * theta1'(0, tau)).

With this gauge the Taylor expansion starts z - (g2/240) z^5 - (g3/840) z^7
with g2, g3 the invariants of the full lattice.  The canonical product over
lattice points is kept alongside as a low-precision cross-check oracle.
"""

from __future__ import annotations

import cmath
import math
from dataclasses import dataclass

from .errors import ConvergenceError, DomainError
from .modular import (
    TERM_CAP,
    TauPoint,
    as_tau,
    j_invariant,
    theta1_eval,
    theta1_odd_series,
)

# Boundary tolerance for fundamental-domain tie-breaking.
_EDGE = 1e-15

# j-values at the two elliptic fixed points, where Newton degenerates and
# the answers are known exactly.
_CORNER = complex(0.5, math.sqrt(3.0) / 2.0)
J_TOLERANCE = 1e-8


@dataclass(frozen=True)
class UnimodularMap:
    """Integer Moebius map (a*tau + b) / (c*tau + d) with a*d - b*c = 1."""

    a: int
    b: int
    c: int
    d: int

    def __post_init__(self):
        if self.a * self.d - self.b * self.c != 1:
            raise DomainError("unimodular map must have determinant exactly 1")

    @classmethod
    def identity(cls) -> "UnimodularMap":
        return cls(1, 0, 0, 1)

    @classmethod
    def translation(cls, n: int) -> "UnimodularMap":
        return cls(1, n, 0, 1)

    @classmethod
    def inversion(cls) -> "UnimodularMap":
        return cls(0, -1, 1, 0)

    def apply(self, tau: complex) -> complex:
        tau = complex(tau)
        return (self.a * tau + self.b) / (self.c * tau + self.d)

    def compose(self, other: "UnimodularMap") -> "UnimodularMap":
        """self after other: (self.compose(other)).apply == self.apply(other.apply(.))."""
        return UnimodularMap(
            self.a * other.a + self.b * other.c,
            self.a * other.b + self.b * other.d,
            self.c * other.a + self.d * other.c,
            self.c * other.b + self.d * other.d,
        )

    def inverse(self) -> "UnimodularMap":
        return UnimodularMap(self.d, -self.b, -self.c, self.a)

    def normalized(self) -> "UnimodularMap":
        """Canonical sign: c > 0, or c == 0 and d > 0 (M and -M act alike)."""
        if self.c < 0 or (self.c == 0 and self.d < 0):
            return UnimodularMap(-self.a, -self.b, -self.c, -self.d)
        return self

    def to_json_dict(self) -> dict:
        return {"a": self.a, "b": self.b, "c": self.c, "d": self.d}


def reduce_tau(tau) -> tuple[TauPoint, UnimodularMap]:
    """Move tau into the fundamental domain.

    Returns (reduced, map) with map.apply(tau) == reduced.  The reduced
    point satisfies Re in [-1/2, 1/2), |tau| >= 1, and Re <= 0 when
    |tau| = 1.
    """
    t = as_tau(tau).value
    m = UnimodularMap.identity()
    for _ in range(256):
        n = math.floor(t.real + 0.5)
        if n != 0:
            t -= n
            m = UnimodularMap.translation(-n).compose(m)
        if abs(t) * abs(t) < 1.0 - _EDGE:
            t = -1.0 / t
            m = UnimodularMap.inversion().compose(m)
        else:
            break
    else:
        raise ConvergenceError(
            "fundamental-domain reduction did not terminate",
            diagnostics={"tau": [as_tau(tau).value.real, as_tau(tau).value.imag]},
        )
    # Deterministic boundary ties: right edge folds to the left edge, and
    # the right half of the unit circle folds to the left half.
    if t.real >= 0.5 - _EDGE:
        t -= 1
        m = UnimodularMap.translation(-1).compose(m)
    if abs(abs(t) - 1.0) <= _EDGE and t.real > _EDGE:
        t = -1.0 / t
        m = UnimodularMap.inversion().compose(m)
    return TauPoint(t), m


@dataclass(frozen=True)
class Lattice:
    """A rank-2 lattice rho * (Z + tau*Z) with its original generators.

    ``reduction`` is the unimodular map that carried the oriented generator
    ratio into the fundamental domain, and ``orientation_flipped`` records
    whether omega2 had to be negated to make Im(omega2/omega1) positive.
    The point set rho * (Z + tau*Z) equals Z*omega1 + Z*omega2 exactly.
    """

    omega1: complex
    omega2: complex
    rho: complex
    tau: TauPoint
    reduction: UnimodularMap
    orientation_flipped: bool

    def points(self, index_bound: int):
        """All nonzero points m*rho + n*rho*tau with |m|, |n| <= index_bound."""
        base1 = self.rho
        base2 = self.rho * self.tau.value
        out = []
        for mm in range(-index_bound, index_bound + 1):
            for nn in range(-index_bound, index_bound + 1):
                if mm == 0 and nn == 0:
                    continue
                out.append(mm * base1 + nn * base2)
        return out


def normalize_lattice(omega1: complex, omega2: complex) -> Lattice:
    """Normalize a generator pair to rho * (Z + tau*Z), tau reduced.

    If Im(omega2/omega1) < 0 the second generator is negated (same point
    set) and the flip is recorded.  The scale rho absorbs the cofactor of
    the reduction so that rho * (Z + tau*Z) regenerates the input lattice
    point set exactly; when omega2/omega1 is already reduced, rho = omega1.
    """
    w1 = complex(omega1)
    w2 = complex(omega2)
    for w in (w1, w2):
        if not (math.isfinite(w.real) and math.isfinite(w.imag)):
            raise DomainError("lattice generators must be finite")
    if w1 == 0 or w2 == 0:
        raise DomainError("lattice generators must be nonzero")
    ratio = w2 / w1
    if abs(ratio.imag) <= 1e-14 * abs(ratio):
        raise DomainError("generators are collinear over the reals")
    flipped = ratio.imag < 0
    if flipped:
        ratio = -ratio
    tau, m = reduce_tau(ratio)
    rho = w1 * (m.c * ratio + m.d)
    return Lattice(
        omega1=w1,
        omega2=w2,
        rho=rho,
        tau=tau,
        reduction=m,
        orientation_flipped=flipped,
    )


def lattice_from_rho_tau(rho: complex, tau) -> Lattice:
    """Build a lattice directly from a scale and an upper-half-plane point."""
    rho = complex(rho)
    if rho == 0:
        raise DomainError("rho must be nonzero")
    t = as_tau(tau).value
    return normalize_lattice(rho, rho * t)


_RESTART_GRID = (
    complex(0.0, 1.2),
    complex(0.25, 1.1),
    complex(-0.25, 1.1),
    complex(0.4, 1.05),
    complex(-0.4, 1.05),
    complex(0.1, 1.5),
    complex(-0.1, 1.5),
    complex(0.0, 2.2),
)


def invert_j(jval: complex, *, tolerance: float = J_TOLERANCE, max_iterations: int = 60) -> TauPoint:
    """Find tau in the fundamental domain with j(tau) = jval.

    Newton iteration on the holomorphic map j, with a finite-difference
    derivative and a fixed, deterministic restart schedule.  The two
    j-values where dj/dtau vanishes are special-cased: jval ~ 0 returns the
    corner (1 + i*sqrt(3))/2 and jval ~ 1728 returns i.  On success
    |j(tau) - jval| <= tolerance * max(1, |jval|).
    """
    jval = complex(jval)
    if not (math.isfinite(jval.real) and math.isfinite(jval.imag)):
        raise DomainError("jval must be finite")
    if abs(jval) <= 1e-10:
        return TauPoint(_CORNER)
    if abs(jval - 1728.0) <= 1e-8 * 1728.0:
        return TauPoint(1j)

    scale = max(1.0, abs(jval))
    starts = []
    if abs(jval) > 2000.0:
        # One term of the Fourier expansion gives an excellent seed.
        q0 = 1.0 / (jval - 744.0)
        starts.append(cmath.log(q0) / (2j * math.pi))
    starts.extend(_RESTART_GRID)

    trace = []
    for start in starts:
        t = start
        iterations = 0
        resid = math.inf
        try:
            for iterations in range(1, max_iterations + 1):
                jt = j_invariant(t)
                resid = abs(jt - jval)
                if resid <= 1e-9 * scale:
                    break
                h = 1e-6 * max(1.0, abs(t))
                deriv = (j_invariant(t + h) - j_invariant(t - h)) / (2.0 * h)
                if deriv == 0:
                    break
                step = (jt - jval) / deriv
                t = t - step
                if t.imag < 0.05:
                    t = complex(t.real, 0.05)
        except ConvergenceError:
            # A stray iterate left the convergent region; try the next start.
            trace.append({"start": [start.real, start.imag],
                          "iterations": iterations, "residual": None})
            continue
        trace.append({"start": [start.real, start.imag], "iterations": iterations,
                      "residual": resid})
        if resid <= tolerance * scale:
            reduced, _ = reduce_tau(t)
            return reduced
    raise ConvergenceError(
        f"invert_j failed for jval={jval} after {len(starts)} starts",
        diagnostics={"jval": [jval.real, jval.imag], "trace": trace},
    )


def sigma_gauge(lat: Lattice, *, term_cap: int = TERM_CAP) -> tuple[complex, complex]:
    """The (alpha, beta) pair relating sigma(., Lambda) to theta1(./rho, tau).

    beta uses the principal logarithm; exp(beta) = rho / theta1'(0, tau).
    """
    head = theta1_odd_series(lat.tau, 3, term_cap=term_cap)
    th1 = head.odd_coefficients[0]          # theta1'(0)
    th3 = head.odd_coefficients[1]          # theta1'''(0) / 6
    alpha = -th3 / (lat.rho**2 * th1)
    beta = cmath.log(lat.rho / th1)
    return complex(alpha), complex(beta)


def sigma_eval(z: complex, lat: Lattice, *, term_cap: int = TERM_CAP) -> complex:
    """Weierstrass sigma of the lattice, normalized by sigma'(0) = 1."""
    z = complex(z)
    head = theta1_odd_series(lat.tau, 3, term_cap=term_cap)
    th1 = head.odd_coefficients[0]
    th3 = head.odd_coefficients[1]
    alpha = -th3 / (lat.rho**2 * th1)
    theta = theta1_eval(z / lat.rho, lat.tau, term_cap=term_cap)
    return complex(theta * cmath.exp(alpha * z * z) * lat.rho / th1)


def sigma_product_oracle(z: complex, lat: Lattice, radius: float) -> complex:
    """Truncated canonical product z * prod (1 - z/l) exp(z/l + (z/l)^2/2).

    The product runs over nonzero lattice points with |l| <= radius.  The
    omitted tail contributes a relative error on the order of
    sum_{|l| > radius} |z/l|^3 = O(1/radius), so this is a low-precision
    cross-check, not a production evaluator.  The truncation region is
    symmetric under l -> -l, which keeps the output exactly odd in z.
    """
    z = complex(z)
    if radius <= 0 or radius < 10.0 * abs(z):
        raise DomainError("radius must be positive and at least 10*|z|")
    base1 = lat.rho
    base2 = lat.rho * lat.tau.value
    # For lam = rho*(m + n*tau) with |lam| <= radius and tau reduced:
    # |n| <= radius/(|rho|*Im tau) and |m| <= (radius/|rho|)*(1 + |Re|/Im).
    t = lat.tau.value
    bound = int((radius / abs(lat.rho)) * (1.0 + abs(t.real) / t.imag)) + 2
    # Points are consumed in +/- pairs and each pair's two factors are
    # multiplied together first; IEEE multiplication is commutative, so
    # the result for -z is the exact negation of the result for z.
    prod = z
    for mm in range(0, bound + 1):
        for nn in range(-bound, bound + 1):
            if mm == 0 and nn <= 0:
                continue
            lam = mm * base1 + nn * base2
            if abs(lam) <= radius:
                w = z / lam
                plus = (1.0 - w) * cmath.exp(w + 0.5 * w * w)
                minus = (1.0 + w) * cmath.exp(-w + 0.5 * w * w)
                prod *= plus * minus
    return complex(prod)
