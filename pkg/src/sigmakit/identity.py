"""Verification machinery for the four-point product identity and the
duplication equation it implies.

The identity under test, for an odd entire function f and arbitrary
complex x, y, z, w, is

    f(x) f(y) f(z) f(w)
  - f((x+y+z-w)/2) f((x+y-z+w)/2) f((x-y+z+w)/2) f((-x+y+z+w)/2)
  - f((x+y+z+w)/2) f((x+y-z-w)/2) f((x-y+z-w)/2) f((x-y-z+w)/2)  =  0.

``identity_residual`` evaluates the left-hand side exactly as written and
reports the largest of the three product magnitudes as a scale for
relative comparison.

Differentiating the left-hand side three times along the direction
(x, x+t, x+u*t, x+u^2*t) with u a primitive cube root of unity collapses
the identity to the duplication equation

    f'(0)^3 * f(2z) = f^4(z) * (log f(z))''',

whose right-hand side is the polynomial form computed by
``series.duplication_rhs``.  ``duplication_residual`` measures the failure
of a truncated odd series to satisfy it, and ``extend_series`` runs the
induced coefficient recurrence: the degree-n residual is affine in a_n
with slope -a1^3 * psi(n), psi(n) = (n-1)(n-2)(n-3) + 8 - 2^n, which is
nonzero for every odd n >= 9, so each coefficient beyond degree 7 is
determined uniquely.
"""

from __future__ import annotations

from dataclasses import dataclass
from typing import Callable

import numpy as np

from .errors import DomainError, NotInOmegaError
from .series import TruncatedOddSeries, duplication_rhs, scale_argument

# Default points at which handle oddness is spot-checked.
_ODDNESS_PROBES = (0.37, 0.11 + 0.23j, -0.52 + 0.08j)
_ODDNESS_TOL = 1e-12


@dataclass(frozen=True)
class QuadruplePoint:
    x: complex
    y: complex
    z: complex
    w: complex

    @classmethod
    def of(cls, x, y, z, w) -> "QuadruplePoint":
        return cls(complex(x), complex(y), complex(z), complex(w))


class OddFunctionHandle:
    """A pointwise evaluator for an odd function, tagged with a label.

    Oddness is spot-checked on a few probe points at construction.
    """

    def __init__(self, evaluator: Callable[[complex], complex], label: str):
        self.evaluator = evaluator
        self.label = label
        for z0 in _ODDNESS_PROBES:
            plus = complex(evaluator(z0))
            minus = complex(evaluator(-z0))
            if abs(plus + minus) > _ODDNESS_TOL * max(1.0, abs(plus)):
                raise DomainError(
                    f"evaluator {label!r} is not odd at probe {z0}: "
                    f"f(z)={plus}, f(-z)={minus}"
                )

    def __call__(self, z: complex) -> complex:
        return complex(self.evaluator(complex(z)))

    @classmethod
    def identity(cls) -> "OddFunctionHandle":
        return cls(lambda z: z, "z")

    @classmethod
    def sine(cls) -> "OddFunctionHandle":
        import cmath

        return cls(cmath.sin, "sin")

    @classmethod
    def from_series(cls, s: TruncatedOddSeries, label: str = "series") -> "OddFunctionHandle":
        return cls(s.evaluate, label)

    @classmethod
    def from_sigma(cls, lat) -> "OddFunctionHandle":
        from .lattice import sigma_eval

        return cls(lambda z: sigma_eval(z, lat), "sigma")

    def twisted(self, alpha: complex, beta: complex) -> "OddFunctionHandle":
        """The handle multiplied by exp(alpha*z^2 + beta)."""
        import cmath

        base = self.evaluator
        return OddFunctionHandle(
            lambda z: base(z) * cmath.exp(alpha * z * z + beta),
            f"{self.label}*exp",
        )


@dataclass(frozen=True)
class IdentityResidual:
    value: complex
    scale: float


def identity_residual(f: OddFunctionHandle, pt: QuadruplePoint) -> IdentityResidual:
    """Left-hand side of the four-point identity at one quadruple.

    ``scale`` is the largest magnitude among the three four-fold products,
    the natural yardstick for calling the residual small.
    """
    x, y, z, w = pt.x, pt.y, pt.z, pt.w
    term1 = f(x) * f(y) * f(z) * f(w)
    term2 = (
        f((x + y + z - w) / 2)
        * f((x + y - z + w) / 2)
        * f((x - y + z + w) / 2)
        * f((-x + y + z + w) / 2)
    )
    term3 = (
        f((x + y + z + w) / 2)
        * f((x + y - z - w) / 2)
        * f((x - y + z - w) / 2)
        * f((x - y - z + w) / 2)
    )
    return IdentityResidual(
        value=term1 - term2 - term3,
        scale=max(abs(term1), abs(term2), abs(term3)),
    )


def sample_quadruples(num_samples: int, seed: int, box_radius: float = 1.0):
    """Deterministic quadruples with all four entries in |.| <= box_radius."""
    rng = np.random.default_rng(seed)
    out = []
    for _ in range(num_samples):
        r = box_radius * np.sqrt(rng.uniform(0.0, 1.0, 4))
        th = rng.uniform(0.0, 2.0 * np.pi, 4)
        vals = r * np.exp(1j * th)
        out.append(QuadruplePoint.of(*vals))
    return out


def identity_report(f: OddFunctionHandle, *, num_samples: int = 100, seed: int = 1729,
                    box_radius: float = 1.0) -> dict:
    """Residual survey over seeded random quadruples.

    Returns a JSON-ready report with the worst absolute residual, the
    scale at which it occurred, and the worst residual-to-scale ratio.
    """
    worst = 0.0
    worst_scale = 0.0
    worst_ratio = 0.0
    for pt in sample_quadruples(num_samples, seed, box_radius):
        res = identity_residual(f, pt)
        if abs(res.value) > worst:
            worst = abs(res.value)
            worst_scale = res.scale
        if res.scale > 0:
            worst_ratio = max(worst_ratio, abs(res.value) / res.scale)
    return {
        "function": f.label,
        "max_abs_residual": worst,
        "scale": worst_scale,
        "max_residual_over_scale": worst_ratio,
        "num_samples": num_samples,
        "seed": seed,
        "box_radius": box_radius,
    }


def duplication_residual(s: TruncatedOddSeries) -> TruncatedOddSeries:
    """Odd series of a1^3 * f(2z) - (f^3 f''' - 3 f^2 f' f'' + 2 f (f')^3).

    Valid through the input max_degree; identically zero (to roundoff) for
    truncations of functions satisfying the four-point identity.
    """
    if s.leading == 0:
        raise NotInOmegaError("leading odd coefficient vanishes")
    if s.max_degree < 3:
        raise DomainError("duplication residual needs max_degree >= 3")
    a1 = s.leading
    doubled = scale_argument(s, 2.0)
    rhs = duplication_rhs(s)
    return TruncatedOddSeries(
        a1**3 * doubled.odd_coefficients - rhs.odd_coefficients
    )


def psi(n: int) -> int:
    """(n-1)(n-2)(n-3) + 8 - 2^n for odd n >= 5; vanishes only at 5 and 7."""
    if n % 2 == 0 or n < 5:
        raise DomainError("psi is defined for odd n >= 5")
    return (n - 1) * (n - 2) * (n - 3) + 8 - 2**n


def extend_series(s: TruncatedOddSeries, target_degree: int) -> TruncatedOddSeries:
    """Extend odd Taylor data by the duplication-equation recurrence.

    Degrees 1..7 are the free data (psi(5) = psi(7) = 0); every higher odd
    coefficient is the unique value annihilating the corresponding residual
    coefficient.  The linearization slope is measured numerically from two
    trial values and asserted against -a1^3 * psi(n), keeping the sign
    convention self-calibrating.  Extension is degree-by-degree, so
    extending to 11 and then to 13 equals extending to 13 directly.
    """
    if s.leading == 0:
        raise NotInOmegaError("leading odd coefficient vanishes")
    if s.max_degree < 7:
        raise DomainError("extension needs data through degree 7")
    if target_degree % 2 == 0 or target_degree <= s.max_degree:
        raise DomainError("target_degree must be odd and exceed max_degree")
    a1 = s.leading
    coeffs = list(s.odd_coefficients)
    for n in range(s.max_degree + 2, target_degree + 1, 2):
        assert psi(n) != 0
        r0 = duplication_residual(
            TruncatedOddSeries(coeffs + [0.0])
        ).coefficient(n)
        r1 = duplication_residual(
            TruncatedOddSeries(coeffs + [1.0])
        ).coefficient(n)
        slope = r1 - r0
        expected = -(a1**3) * psi(n)
        assert abs(slope - expected) <= 1e-9 * abs(expected)
        coeffs.append(-r0 / slope)
    return TruncatedOddSeries(coeffs)


def duplication_report(s: TruncatedOddSeries) -> dict:
    """JSON-ready residual summary for a series.

    ``first_nonzero_degree`` ignores roundoff dust: the residual is
    quartic in the coefficients, so only entries above
    1e-12 * max(1, coefficient scale)^4 count.
    """
    res = duplication_residual(s)
    mags = np.abs(res.odd_coefficients)
    scale = max(1.0, float(np.max(np.abs(s.odd_coefficients))))
    meaningful = np.nonzero(mags > 1e-12 * scale**4)[0]
    return {
        "max_degree": res.max_degree,
        "residual_coefficients": [[c.real, c.imag] for c in res.odd_coefficients],
        "max_abs_residual": float(mags.max()),
        "first_nonzero_degree": (
            int(2 * int(meaningful[0]) + 1) if meaningful.size else None
        ),
    }
