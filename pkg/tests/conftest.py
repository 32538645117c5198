"""Shared numerical oracles for the test suite.

Everything here is deliberately written from scratch in the plainest way
possible (direct summation, brute-force products, FFT coefficient
extraction) so it stays independent of the library's own evaluation
routes.
"""

import cmath
import math

import numpy as np


def eta_product_oracle(tau, terms=200):
    """Dedekind eta by blunt truncation of the defining product."""
    q = cmath.exp(2j * math.pi * tau)
    out = cmath.exp(1j * math.pi * tau / 12.0)
    for n in range(1, terms + 1):
        out *= 1.0 - q**n
    return out


def theta1_sum_oracle(z, tau, terms=20):
    """First theta function by direct partial summation."""
    total = 0.0 + 0.0j
    for n in range(terms + 1):
        total += (
            2.0
            * (-1) ** n
            * cmath.exp(1j * math.pi * tau * (n + 0.5) ** 2)
            * cmath.sin((2 * n + 1) * math.pi * z)
        )
    return total


def circle_coefficients(f, count, radius=0.4, samples=64):
    """Taylor coefficients a_0..a_(count-1) of f via FFT on a circle."""
    zs = radius * np.exp(2j * math.pi * np.arange(samples) / samples)
    vals = np.array([f(z) for z in zs])
    coeffs = np.fft.fft(vals) / samples
    return coeffs[:count] / radius ** np.arange(count)


def third_derivative(g, step):
    """Richardson-extrapolated central difference for g'''(0)."""

    def central(h):
        return (g(2 * h) - 2 * g(h) + 2 * g(-h) - g(-2 * h)) / (2 * h**3)

    return (4.0 * central(step / 2) - central(step)) / 3.0


def integer_combination(point, basis1, basis2):
    """Solve point = m*basis1 + n*basis2 over the reals; returns (m, n)."""
    mat = np.array(
        [[basis1.real, basis2.real], [basis1.imag, basis2.imag]], dtype=float
    )
    rhs = np.array([point.real, point.imag], dtype=float)
    return np.linalg.solve(mat, rhs)
