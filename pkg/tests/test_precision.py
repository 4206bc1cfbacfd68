import mpmath
import pytest
from mpmath import mp, mpf

from cotanasym import (
    DomainError,
    InvalidArgumentError,
    PiPolynomial,
    Q,
    eval_pi_poly,
    gamma_real,
    make_context,
    pi_value,
)
from cotanasym.coeffs import c_tilde

from conftest import assert_close

PI_50 = "3.14159265358979323846264338327950288419716939937511"


class TestContext:
    def test_construction(self):
        assert make_context(50).digits == 50
        assert make_context(30000).digits == 30000  # the large-scale regime
        assert make_context(50).rounding == "nearest-even"

    def test_zero_digits_rejected(self):
        with pytest.raises(InvalidArgumentError):
            make_context(0)

    def test_binary_overprovision(self):
        ctx = make_context(100)
        assert ctx.prec_bits >= 100 * 3.3219 + 32


class TestPi:
    def test_digits_against_reference(self, ctx50):
        with mp.workdps(60):
            assert_close(pi_value(ctx50), mpf(PI_50), mpf(10) ** -49, "pi(50)")

    def test_sin_pi_identity(self):
        for digits in (30, 50, 200):
            ctx = make_context(digits)
            with ctx.work():
                assert abs(mpmath.sin(pi_value(ctx))) < mpf(10) ** (-digits + 2)

    def test_prefix_consistency(self, ctx50):
        a = pi_value(ctx50)
        b = pi_value(make_context(100))
        with mp.workdps(110):
            assert abs(a - b) < mpf(10) ** -49


class TestGamma:
    def test_factorial_point(self, ctx50):
        with ctx50.work():
            assert abs(gamma_real(5, ctx50) - 24) < mpf(10) ** -45

    def test_half_integers(self, ctx50):
        with ctx50.work():
            sqrt_pi = mpmath.sqrt(pi_value(ctx50))
            assert_close(gamma_real(Q(1, 2), ctx50), sqrt_pi, mpf(10) ** -45, "gamma(1/2)")
            assert_close(gamma_real(Q(3, 2), ctx50), sqrt_pi / 2, mpf(10) ** -45, "gamma(3/2)")

    def test_nonpositive_rejected(self, ctx50):
        with pytest.raises(DomainError):
            gamma_real(0, ctx50)
        with pytest.raises(DomainError):
            gamma_real(-2, ctx50)


class TestEvalPiPoly:
    def test_constant(self, ctx50):
        assert eval_pi_poly(PiPolynomial.constant(1), ctx50) == 1

    def test_zeta2(self, ctx50):
        with ctx50.work():
            expected = mpf("1.6449340668482264364724151666460252")
            assert_close(eval_pi_poly(PiPolynomial({1: Q(1, 6)}), ctx50), expected,
                         mpf(10) ** -33, "zeta(2)")

    def test_first_asymptotic_coefficient(self, ctx50):
        with ctx50.work():
            expected = mpf("3.4773681336964528729448303332920504")
            assert_close(eval_pi_poly(PiPolynomial({0: Q(3, 16), 1: Q(1, 3)}), ctx50),
                         expected, mpf(10) ** -33, "Ctilde_1")

    def test_two_context_agreement_well_conditioned(self):
        polys = [c_tilde(l).value for l in range(10)] + [PiPolynomial({3: Q(7, 5)})]
        d = 60
        for p in polys:
            a = eval_pi_poly(p, make_context(d))
            b = eval_pi_poly(p, make_context(d + 20))
            with mp.workdps(d + 30):
                assert abs(a - b) <= abs(b) * mpf(10) ** (-(d - 5))
