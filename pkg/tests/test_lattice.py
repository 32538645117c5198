import cmath
import math

import numpy as np
import pytest

from conftest import circle_coefficients, integer_combination
from sigmakit import (
    DomainError,
    UnimodularMap,
    invert_j,
    j_invariant,
    lattice_from_rho_tau,
    normalize_lattice,
    reduce_tau,
    sigma_eval,
    sigma_gauge,
    sigma_product_oracle,
    theta1_eval,
    weierstrass_g,
)

CORNER = 0.5 + 1j * math.sqrt(3) / 2


def random_unimodular(rng, words=6):
    m = UnimodularMap.identity()
    for _ in range(words):
        if rng.uniform() < 0.5:
            m = UnimodularMap.translation(int(rng.integers(-3, 4))).compose(m)
        else:
            m = UnimodularMap.inversion().compose(m)
    return m


class TestUnimodularMap:
    def test_determinant_enforced(self):
        with pytest.raises(DomainError):
            UnimodularMap(1, 0, 0, -1)

    def test_compose_matches_apply(self):
        rng = np.random.default_rng(10)
        for _ in range(10):
            m1 = random_unimodular(rng)
            m2 = random_unimodular(rng)
            tau = complex(rng.uniform(-1, 1), rng.uniform(0.5, 2))
            lhs = m1.compose(m2).apply(tau)
            rhs = m1.apply(m2.apply(tau))
            assert abs(lhs - rhs) < 1e-12 * max(1, abs(rhs))

    def test_inverse(self):
        rng = np.random.default_rng(11)
        for _ in range(10):
            m = random_unimodular(rng)
            tau = complex(rng.uniform(-1, 1), rng.uniform(0.5, 2))
            assert abs(m.inverse().apply(m.apply(tau)) - tau) < 1e-12


class TestReduceTau:
    def test_translation_only(self):
        reduced, m = reduce_tau(5 + 1j)
        assert abs(reduced.value - 1j) < 1e-15
        assert m == UnimodularMap(1, -5, 0, 1)

    def test_inversion_only(self):
        reduced, m = reduce_tau(0.5j)
        assert abs(reduced.value - 2j) < 1e-15
        assert m.normalized() == UnimodularMap.inversion().normalized()

    def test_j_equality_oracle(self):
        tau = 0.3 + 0.1j
        reduced, m = reduce_tau(tau)
        assert abs(m.apply(tau) - reduced.value) < 1e-12
        j_in = j_invariant(tau)
        j_out = j_invariant(reduced)
        assert abs(j_in - j_out) <= 1e-8 * max(1.0, abs(j_out))

    def test_domain_membership(self):
        rng = np.random.default_rng(12)
        for _ in range(40):
            tau = complex(rng.uniform(-3, 3), rng.uniform(0.05, 3))
            reduced, m = reduce_tau(tau)
            t = reduced.value
            assert -0.5 - 1e-12 <= t.real < 0.5
            assert abs(t) >= 1 - 1e-12
            if abs(abs(t) - 1) <= 1e-12:
                assert t.real <= 1e-12
            assert abs(m.apply(tau) - t) < 1e-9 * max(1, abs(t))

    def test_roundtrip_with_random_maps(self):
        rng = np.random.default_rng(13)
        for _ in range(25):
            # Interior points: stay off the domain boundary so the
            # representative is unique.
            tau = complex(rng.uniform(-0.45, 0.45), rng.uniform(1.05, 2.0))
            m = random_unimodular(rng)
            moved = m.apply(tau)
            reduced, back = reduce_tau(moved)
            assert abs(reduced.value - tau) < 1e-10
            assert back.normalized() == m.inverse().normalized()

    def test_corner_tie_break(self):
        # Both corners represent the same orbit; the convention keeps the
        # left one.
        reduced, _ = reduce_tau(CORNER)
        assert abs(reduced.value - (CORNER - 1)) < 1e-12


class TestNormalizeLattice:
    def test_already_normalized(self):
        lat = normalize_lattice(1, 1j)
        assert lat.rho == 1
        assert abs(lat.tau.value - 1j) < 1e-15
        assert not lat.orientation_flipped

    def test_common_scale(self):
        lat = normalize_lattice(2, 2j)
        assert lat.rho == 2
        assert abs(lat.tau.value - 1j) < 1e-15

    def test_orientation_swap(self):
        # (i, 1): the ratio 1/i lies in the lower half-plane, so the
        # second generator is negated; the same point set results.
        lat = normalize_lattice(1j, 1)
        assert lat.orientation_flipped
        assert abs(lat.rho - 1j) < 1e-15
        assert abs(lat.tau.value - 1j) < 1e-15
        mn = integer_combination(lat.rho, 1j, 1.0)
        assert np.allclose(mn, np.round(mn), atol=1e-9)

    def test_point_set_regeneration(self):
        rng = np.random.default_rng(14)
        for _ in range(10):
            w1 = complex(rng.uniform(-2, 2), rng.uniform(-2, 2))
            w2 = complex(rng.uniform(-2, 2), rng.uniform(-2, 2))
            if abs((w2 / w1).imag) < 0.05:
                continue
            lat = normalize_lattice(w1, w2)
            # Every normalized lattice point must be an integer combination
            # of the originals, and the originals of the normalized pair.
            for point in lat.points(2):
                mn = integer_combination(point, w1, w2)
                assert np.allclose(mn, np.round(mn), atol=1e-8)
            for point in (w1, w2):
                mn = integer_combination(point, lat.rho, lat.rho * lat.tau.value)
                assert np.allclose(mn, np.round(mn), atol=1e-8)

    def test_collinear_rejected(self):
        with pytest.raises(DomainError):
            normalize_lattice(1 + 1j, -2 - 2j)
        with pytest.raises(DomainError):
            normalize_lattice(1, 0)


class TestInvertJ:
    def test_square_lattice(self):
        tau = invert_j(1728.0)
        assert abs(tau.value - 1j) < 1e-12

    def test_corner(self):
        tau = invert_j(0.0)
        assert abs(tau.value - CORNER) < 1e-12

    def test_cm_point(self):
        tau = invert_j(287496.0)
        assert abs(tau.value - 2j) < 1e-8
        assert abs(j_invariant(tau) - 287496.0) <= 1e-8 * 287496.0

    def test_forward_backward_identity(self):
        # Samples keep their distance from the two critical points, where
        # the derivative of j vanishes and 1e-8 in j cannot pin tau to 1e-6.
        for tau in (0.3 + 1.2j, -0.21 + 1.05j, 1.5j, 0.45 + 1.6j, 2.2j):
            reduced, _ = reduce_tau(tau)
            jval = j_invariant(reduced)
            back = invert_j(jval)
            assert abs(back.value - reduced.value) < 1e-6

    def test_large_modulus_seeded_from_q_expansion(self):
        jval = 1e8 + 1e7j
        tau = invert_j(jval)
        assert abs(j_invariant(tau) - jval) <= 1e-8 * abs(jval)

    def test_rejects_non_finite(self):
        with pytest.raises(DomainError):
            invert_j(complex(float("inf"), 0))


class TestSigmaEval:
    def test_normalization_at_origin(self):
        lat = lattice_from_rho_tau(1, 1j)
        assert sigma_eval(0.0, lat) == 0
        for h in (1e-4, 1e-4j):
            ratio = sigma_eval(h, lat) / h
            assert abs(ratio - 1.0) < 1e-10

    def test_derivative_at_origin(self):
        # sigma'(0) = 1; the cubic coefficient vanishes, so the symmetric
        # difference converges like h^4.
        for lat in (lattice_from_rho_tau(1, 1j), normalize_lattice(1.3, 0.4 + 1.2j)):
            h = 1e-4
            deriv = (sigma_eval(h, lat) - sigma_eval(-h, lat)) / (2 * h)
            assert abs(deriv - 1.0) < 1e-10

    def test_odd(self):
        lat = normalize_lattice(1.1, 0.2 + 1.3j)
        rng = np.random.default_rng(15)
        for _ in range(5):
            z = complex(rng.uniform(-1, 1), rng.uniform(-1, 1))
            assert abs(sigma_eval(z, lat) + sigma_eval(-z, lat)) < 1e-12

    def test_vanishes_on_lattice(self):
        for lat in (lattice_from_rho_tau(1, 1j), normalize_lattice(1.2, 0.3 + 1.1j)):
            tau = lat.tau.value
            for lam in (lat.rho, lat.rho * tau, lat.rho * (1 + tau)):
                assert abs(sigma_eval(lam, lat)) < 1e-9

    def test_gauge_relation(self):
        # sigma(z) = theta1(z/rho, tau) * exp(alpha*z^2 + beta) with the
        # pair reported by sigma_gauge.
        lat = normalize_lattice(1.2, 0.3 + 1.1j)
        alpha, beta = sigma_gauge(lat)
        for z in (0.4 + 0.1j, -0.2 + 0.3j):
            via_gauge = theta1_eval(z / lat.rho, lat.tau) * cmath.exp(
                alpha * z * z + beta
            )
            direct = sigma_eval(z, lat)
            assert abs(via_gauge - direct) <= 1e-12 * abs(direct)

    def test_taylor_coefficients_match_lattice_forms(self):
        # a3 ~ 0, a5 = -g2/240, a7 = -g3/840 with g2, g3 scaled by rho.
        for rho, tau in ((1, 2j), (1, 0.3 + 1.1j), (0.8 + 0.1j, -0.2 + 1.4j)):
            lat = lattice_from_rho_tau(rho, tau)
            g2, g3 = weierstrass_g(lat.tau)
            g2 /= lat.rho**4
            g3 /= lat.rho**6
            coeffs = circle_coefficients(lambda z: sigma_eval(z, lat), 8, radius=0.3)
            assert abs(coeffs[1] - 1.0) < 1e-9
            assert abs(coeffs[3]) < 1e-9
            assert abs(coeffs[5] + g2 / 240) <= 1e-6 * abs(g2 / 240)
            assert abs(coeffs[7] + g3 / 840) <= 1e-6 * abs(g3 / 840)


class TestSigmaProductOracle:
    def test_zero_at_origin(self):
        lat = lattice_from_rho_tau(1, 1j)
        assert sigma_product_oracle(0.0, lat, 25.0) == 0

    def test_agrees_with_theta_route(self):
        lat = lattice_from_rho_tau(1, 1j)
        z = 0.3 + 0.2j
        via_product = sigma_product_oracle(z, lat, 50.0)
        via_theta = sigma_eval(z, lat)
        assert abs(via_product - via_theta) <= 1e-4 * abs(via_theta)

    def test_exactly_odd(self):
        lat = normalize_lattice(1.0, 0.25 + 1.2j)
        for z in (0.21 + 0.13j, -0.32 + 0.04j):
            plus = sigma_product_oracle(z, lat, 30.0)
            minus = sigma_product_oracle(-z, lat, 30.0)
            assert minus == -plus

    def test_radius_precondition(self):
        lat = lattice_from_rho_tau(1, 1j)
        with pytest.raises(DomainError):
            sigma_product_oracle(1.0, lat, 5.0)
