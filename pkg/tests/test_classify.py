import cmath
import math

import numpy as np
import pytest

from conftest import circle_coefficients
from sigmakit import (
    Classification,
    IdentityNotSatisfiedError,
    NotInOmegaError,
    TauPoint,
    TruncatedOddSeries,
    classify,
    duplication_residual,
    gauss_twist,
    lattice_from_rho_tau,
    scale_argument,
    sigma_eval,
    synthesize,
    theta1_odd_series,
)


def sine_series(count):
    return TruncatedOddSeries(
        [(-1) ** k / math.factorial(2 * k + 1) for k in range(count)]
    )


def wrap_to_principal(delta):
    """Reduce an additive 2*pi*i ambiguity to the principal strip."""
    k = round(delta.imag / (2 * math.pi))
    return delta - 2j * math.pi * k


def random_classification(rng, case):
    alpha = complex(*rng.uniform(-0.8, 0.8, 2))
    beta = complex(*rng.uniform(-0.8, 0.8, 2))
    if case == "linear":
        return Classification(case="linear", alpha=alpha, beta=beta)
    if case == "trig":
        a = cmath.rect(rng.uniform(0.5, 1.5), rng.uniform(-1.2, 1.2))
        return Classification(case="trig", alpha=alpha, beta=beta, a=a)
    rho = cmath.rect(rng.uniform(0.7, 1.4), rng.uniform(-1.2, 1.2))
    tau = TauPoint(complex(rng.uniform(-0.45, 0.45), rng.uniform(1.05, 2.0)))
    return Classification(case="elliptic", alpha=alpha, beta=beta, rho=rho, tau=tau)


class TestClassifyExamples:
    def test_gaussian_twist_of_z(self):
        s = gauss_twist(TruncatedOddSeries([1, 0, 0, 0]), 2.0, 0.0)
        c = classify(s)
        assert c.case == "linear"
        assert abs(c.alpha - 2.0) <= 1e-14
        assert abs(c.beta) <= 1e-14

    def test_scaled_sine(self):
        s = scale_argument(sine_series(4), 3.0)
        c = classify(s)
        assert c.case == "trig"
        assert abs(c.a - 3.0) <= 1e-12
        assert abs(c.alpha) <= 1e-12
        assert abs(c.beta) <= 1e-12
        # Invariant diagnostics carry the raw p, q, mu of the input.
        p = complex(*c.diagnostics["p"])
        q = complex(*c.diagnostics["q"])
        mu = complex(*c.diagnostics["mu"]["value"])
        assert abs(p - 81 / 10) <= 1e-12 * (81 / 10)
        assert abs(q + 19683 / 945) <= 1e-12 * (19683 / 945)
        assert abs(mu - 49 / 40) <= 1e-12 * (49 / 40)

    def test_theta_series_is_square_lattice_sigma(self):
        s = theta1_odd_series(1j, 7)
        c = classify(s)
        assert c.case == "elliptic"
        assert c.diagnostics["mu"]["tag"] == "infinity"
        assert complex(*c.diagnostics["j"]) == 1728
        assert abs(c.tau.value - 1j) <= 1e-12
        assert abs(abs(c.rho) - 1.0) <= 1e-10

    def test_not_in_omega(self):
        with pytest.raises(NotInOmegaError):
            classify(TruncatedOddSeries([0, 1, 0, 0]))


class TestSynthesizeExamples:
    def test_linear_trivial(self):
        s = synthesize(Classification(case="linear", alpha=0.0, beta=0.0), 7)
        assert np.array_equal(s.odd_coefficients, [1, 0, 0, 0])

    def test_trig_trivial(self):
        s = synthesize(
            Classification(case="trig", alpha=0.0, beta=0.0, a=1.0 + 0j), 7
        )
        assert np.allclose(s.odd_coefficients, sine_series(4).odd_coefficients)

    def test_elliptic_matches_sigma_eval(self):
        lat = lattice_from_rho_tau(1, 1j)
        c = Classification(
            case="elliptic", alpha=0.0, beta=0.0, rho=1.0 + 0j, tau=TauPoint(1j)
        )
        s = synthesize(c, 7)
        extracted = circle_coefficients(lambda z: sigma_eval(z, lat), 8, radius=0.3)
        for k in range(4):
            want = extracted[2 * k + 1]
            got = s.odd_coefficients[k]
            assert abs(got - want) <= 1e-8 * max(1.0, abs(want))


class TestRoundTrip:
    def test_twenty_seeded_members(self):
        rng = np.random.default_rng(1729)
        cases = ["linear", "trig", "elliptic"]
        for trial in range(20):
            case = cases[trial % 3]
            made = random_classification(rng, case)
            series = synthesize(made, 9)
            got = classify(series)
            assert got.case == made.case
            assert abs(got.alpha - made.alpha) <= 1e-8
            assert abs(wrap_to_principal(got.beta - made.beta)) <= 1e-8
            if case == "trig":
                assert abs(got.a - made.a) <= 1e-8
            if case == "elliptic":
                assert abs(got.tau.value - made.tau.value) <= 1e-6
                assert abs(got.rho - made.rho) <= 1e-5 * abs(made.rho)

    def test_scale_gauge_soundness(self):
        # Scaling the argument leaves the reduced tau fixed and divides
        # rho by the scale.
        rng = np.random.default_rng(99)
        base = random_classification(rng, "elliptic")
        series = synthesize(base, 7)
        first = classify(series)
        for a in (2.0, 0.5 + 0.1j):
            moved = classify(scale_argument(series, a))
            assert moved.case == "elliptic"
            assert abs(moved.tau.value - first.tau.value) <= 1e-6
            assert abs(moved.rho - first.rho / a) <= 1e-6 * abs(first.rho / a)

    def test_classified_members_satisfy_duplication(self):
        rng = np.random.default_rng(7)
        for case in ("linear", "trig", "elliptic"):
            made = random_classification(rng, case)
            series = synthesize(made, 9)
            rebuilt = synthesize(classify(series), 9)
            res = duplication_residual(rebuilt)
            scale = float(np.max(np.abs(rebuilt.odd_coefficients)))
            assert float(np.max(np.abs(res.odd_coefficients))) <= 1e-9 * max(1, scale)


class TestValidationOfHigherDegrees:
    def test_cubic_rejected(self):
        # z + z^3 matches an elliptic member through degree 7, but its
        # degree-9 coefficient 0 conflicts with the forced value 1/28.
        s = TruncatedOddSeries([1, 1, 0, 0, 0])
        with pytest.raises(IdentityNotSatisfiedError):
            classify(s)

    def test_true_member_accepted_at_degree_nine(self):
        rng = np.random.default_rng(5)
        made = random_classification(rng, "elliptic")
        series = synthesize(made, 11)
        got = classify(series)
        assert got.case == "elliptic"

    def test_corrupted_tail_rejected(self):
        made = Classification(case="trig", alpha=0.1, beta=0.0, a=1.2 + 0j)
        series = synthesize(made, 9)
        coeffs = np.array(series.odd_coefficients)
        coeffs[4] += 0.01
        with pytest.raises(IdentityNotSatisfiedError):
            classify(TruncatedOddSeries(coeffs))


class TestClassificationRecord:
    def test_case_validation(self):
        with pytest.raises(Exception):
            Classification(case="weird", alpha=0, beta=0)
        with pytest.raises(Exception):
            Classification(case="trig", alpha=0, beta=0, a=None)
        with pytest.raises(Exception):
            Classification(case="elliptic", alpha=0, beta=0)

    def test_json_shape(self):
        c = Classification(
            case="elliptic",
            alpha=0.5j,
            beta=0.25,
            rho=1.0 + 0j,
            tau=TauPoint(1.3j),
            diagnostics={"j": [100.0, 0.0]},
        )
        doc = c.to_json_dict()
        assert doc["case"] == "elliptic"
        assert doc["alpha"] == [0.0, 0.5]
        assert doc["beta"] == [0.25, 0.0]
        assert doc["rho"] == [1.0, 0.0]
        assert doc["tau"] == [0.0, 1.3]
        assert doc["diagnostics"]["j"] == [100.0, 0.0]
