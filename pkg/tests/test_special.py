"""Scalar special functions against closed forms, scipy, and quadrature."""

import math

import numpy as np
import pytest
import scipy.integrate
import scipy.special

from dirmix.errors import DomainError, EmptyInputError
from dirmix.special import digamma, log_beta, log_gamma, log_sum_exp, reg_inc_beta

EULER_GAMMA = 0.5772156649015328606


class TestLogGamma:
    def test_known_values(self):
        assert log_gamma(1.0) == pytest.approx(0.0, abs=1e-14)
        assert log_gamma(5.0) == pytest.approx(math.log(24.0), rel=1e-13)
        assert log_gamma(0.5) == pytest.approx(0.5 * math.log(math.pi), rel=1e-13)

    def test_against_scipy_wide_range(self):
        rng = np.random.default_rng(7)
        xs = np.concatenate(
            [
                10.0 ** rng.uniform(-6, 6, size=2000),
                rng.uniform(1e-6, 20.0, size=2000),
            ]
        )
        for x in xs:
            np.testing.assert_allclose(
                log_gamma(float(x)),
                scipy.special.gammaln(x),
                rtol=1e-12,
                atol=1e-12,
            )

    def test_factorial_recurrence(self):
        rng = np.random.default_rng(11)
        for x in rng.uniform(0.01, 100.0, size=500):
            lhs = log_gamma(x + 1.0)
            rhs = log_gamma(x) + math.log(x)
            np.testing.assert_allclose(lhs, rhs, rtol=1e-11, atol=1e-11)

    @pytest.mark.parametrize("bad", [0.0, -1.0, -0.5, math.nan, math.inf, -math.inf])
    def test_domain_errors(self, bad):
        with pytest.raises(DomainError):
            log_gamma(bad)


class TestDigamma:
    def test_known_values(self):
        assert digamma(1.0) == pytest.approx(-EULER_GAMMA, abs=1e-12)
        assert digamma(2.0) == pytest.approx(1.0 - EULER_GAMMA, abs=1e-12)

    def test_finite_difference_of_log_gamma(self):
        # digamma is the derivative of log_gamma; central differences with
        # step 1e-5 resolve it to ~1e-6 away from the origin.
        h = 1e-5
        rng = np.random.default_rng(3)
        points = np.concatenate([[10.5], rng.uniform(0.1, 100.0, size=300)])
        for x in points:
            fd = (log_gamma(x + h) - log_gamma(x - h)) / (2.0 * h)
            assert digamma(float(x)) == pytest.approx(fd, abs=1e-6)

    def test_against_scipy_wide_range(self):
        rng = np.random.default_rng(5)
        xs = 10.0 ** rng.uniform(-6, 6, size=4000)
        for x in xs:
            np.testing.assert_allclose(
                digamma(float(x)),
                scipy.special.digamma(x),
                rtol=1e-12,
                atol=1e-10,
            )

    def test_recurrence(self):
        rng = np.random.default_rng(13)
        for x in rng.uniform(1e-3, 100.0, size=500):
            assert digamma(x + 1.0) - digamma(x) == pytest.approx(1.0 / x, abs=1e-9)

    @pytest.mark.parametrize("bad", [0.0, -2.0, math.nan, math.inf])
    def test_domain_errors(self, bad):
        with pytest.raises(DomainError):
            digamma(bad)


class TestLogBeta:
    def test_known_values(self):
        assert log_beta([1.0, 1.0]) == pytest.approx(0.0, abs=1e-14)
        assert log_beta([2.0, 3.0]) == pytest.approx(math.log(1.0 / 12.0), rel=1e-13)
        assert log_beta([1.0, 1.0, 1.0]) == pytest.approx(math.log(0.5), rel=1e-13)

    def test_symmetry_is_exact(self):
        rng = np.random.default_rng(17)
        for _ in range(200):
            a, b = rng.uniform(0.05, 80.0, size=2)
            assert log_beta([a, b]) == log_beta([b, a])

    def test_against_scipy(self):
        rng = np.random.default_rng(19)
        for _ in range(300):
            d = rng.integers(2, 6)
            alpha = rng.uniform(0.05, 50.0, size=d)
            expected = scipy.special.gammaln(alpha).sum() - scipy.special.gammaln(
                alpha.sum()
            )
            np.testing.assert_allclose(
                log_beta(alpha), expected, rtol=1e-11, atol=1e-11
            )

    def test_domain_errors(self):
        with pytest.raises(DomainError):
            log_beta([1.0])
        with pytest.raises(DomainError):
            log_beta([1.0, 0.0])
        with pytest.raises(DomainError):
            log_beta([1.0, -2.0, 3.0])
        with pytest.raises(DomainError):
            log_beta([1.0, math.inf])


class TestRegIncBeta:
    def test_known_values(self):
        assert reg_inc_beta(0.3, 1.0, 1.0) == pytest.approx(0.3, abs=1e-12)
        # Beta(2,2) CDF is the polynomial 3x^2 - 2x^3
        assert reg_inc_beta(0.25, 2.0, 2.0) == pytest.approx(0.15625, abs=1e-12)
        assert reg_inc_beta(0.0, 3.0, 4.0) == 0.0
        assert reg_inc_beta(1.0, 3.0, 4.0) == 1.0

    def test_quadrature_oracle(self):
        # integrate the Beta(3.5, 1.2) density directly
        a, b = 3.5, 1.2
        norm = math.exp(-log_beta([a, b]))
        val, err = scipy.integrate.quad(
            lambda t: norm * t ** (a - 1.0) * (1.0 - t) ** (b - 1.0),
            0.0,
            0.7,
            epsabs=1e-12,
            epsrel=1e-12,
        )
        assert err < 1e-10
        assert reg_inc_beta(0.7, a, b) == pytest.approx(val, abs=1e-8)

    def test_against_scipy_wide_range(self):
        rng = np.random.default_rng(23)
        for _ in range(2000):
            a = 10.0 ** rng.uniform(-1, 2.5)
            b = 10.0 ** rng.uniform(-1, 2.5)
            x = rng.uniform(0.0, 1.0)
            np.testing.assert_allclose(
                reg_inc_beta(x, a, b),
                scipy.special.betainc(a, b, x),
                atol=1e-10,
                rtol=1e-9,
            )

    def test_reflection_identity(self):
        rng = np.random.default_rng(29)
        for _ in range(500):
            a, b = rng.uniform(0.1, 60.0, size=2)
            x = rng.uniform(0.0, 1.0)
            total = reg_inc_beta(x, a, b) + reg_inc_beta(1.0 - x, b, a)
            assert total == pytest.approx(1.0, abs=1e-9)

    def test_monotone_in_x(self):
        xs = np.linspace(0.0, 1.0, 201)
        vals = [reg_inc_beta(float(x), 0.4, 2.7) for x in xs]
        assert all(v2 >= v1 for v1, v2 in zip(vals, vals[1:]))
        assert vals[0] == 0.0
        assert vals[-1] == 1.0

    def test_extreme_parameters_stay_in_range(self):
        for a, b in [(4.85e8, 1.0), (1.0, 4.85e8), (2.2e4, 1.3), (1e-6, 5.0)]:
            for x in [1e-12, 0.25, 0.5, 0.75, 1.0 - 1e-12]:
                v = reg_inc_beta(x, a, b)
                assert 0.0 <= v <= 1.0

    def test_domain_errors(self):
        with pytest.raises(DomainError):
            reg_inc_beta(-0.1, 1.0, 1.0)
        with pytest.raises(DomainError):
            reg_inc_beta(1.1, 1.0, 1.0)
        with pytest.raises(DomainError):
            reg_inc_beta(0.5, 0.0, 1.0)
        with pytest.raises(DomainError):
            reg_inc_beta(0.5, 1.0, -1.0)
        with pytest.raises(DomainError):
            reg_inc_beta(math.nan, 1.0, 1.0)


class TestLogSumExp:
    def test_known_values(self):
        assert log_sum_exp([0.0, 0.0]) == pytest.approx(math.log(2.0), rel=1e-14)
        assert log_sum_exp([1000.0, 1000.0]) == pytest.approx(
            1000.0 + math.log(2.0), rel=1e-14
        )
        assert log_sum_exp([-3.1]) == -3.1

    def test_shift_invariance(self):
        rng = np.random.default_rng(31)
        for _ in range(200):
            v = rng.normal(size=rng.integers(1, 12))
            c = rng.uniform(-500.0, 500.0)
            assert log_sum_exp(v + c) == pytest.approx(
                log_sum_exp(v) + c, abs=1e-12 * max(1.0, abs(c))
            )

    def test_matches_direct_sum(self):
        rng = np.random.default_rng(37)
        for _ in range(200):
            v = rng.uniform(-5.0, 5.0, size=rng.integers(2, 10))
            direct = math.log(np.exp(v).sum())
            assert log_sum_exp(v) == pytest.approx(direct, rel=1e-12)

    def test_errors(self):
        with pytest.raises(EmptyInputError):
            log_sum_exp([])
        with pytest.raises(DomainError):
            log_sum_exp([0.0, math.nan])
        with pytest.raises(DomainError):
            log_sum_exp([0.0, math.inf])
