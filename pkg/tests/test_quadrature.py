import mpmath
import pytest
from mpmath import mpf

from cotanasym import AccuracyError, InvalidArgumentError, QuadratureConfig
from cotanasym.quadrature import de_halfline

from conftest import assert_close


class TestConfig:
    def test_validation(self):
        with pytest.raises(InvalidArgumentError):
            QuadratureConfig(target_abs_error=0)
        with pytest.raises(InvalidArgumentError):
            QuadratureConfig(max_levels=0)

    def test_string_tolerance_survives_tiny_values(self):
        q = QuadratureConfig("1e-500", 10)
        assert q.tolerance() == mpf(10) ** -500


class TestDEHalfline:
    def test_exponential(self, ctx40):
        with ctx40.work():
            val = de_halfline(lambda x: mpmath.exp(-x), ctx40, mpf(10) ** -30)
            assert_close(val, 1, mpf(10) ** -29, "int e^-x")

    def test_gamma_two(self, ctx40):
        with ctx40.work():
            val = de_halfline(lambda x: x * mpmath.exp(-x), ctx40, mpf(10) ** -30)
            assert_close(val, 1, mpf(10) ** -29, "int x e^-x")

    def test_endpoint_singularity(self, ctx40):
        # int_0^inf e^-x / sqrt(x) dx = sqrt(pi)
        with ctx40.work():
            val = de_halfline(lambda x: mpmath.exp(-x) / mpmath.sqrt(x), ctx40, mpf(10) ** -30)
            assert_close(val, mpmath.sqrt(mpmath.pi), mpf(10) ** -28, "Gamma(1/2)")

    def test_double_decay(self, ctx40):
        # int_0^inf exp(-x - 1/x) dx = 2 K_1(2)
        with ctx40.work():
            val = de_halfline(lambda x: mpmath.exp(-x - 1 / x), ctx40, mpf(10) ** -30)
            assert_close(val, 2 * mpmath.besselk(1, 2), mpf(10) ** -28, "2K_1(2)")

    def test_complex_integrand(self, ctx40):
        # int_0^inf e^{-(1+i)x} dx = 1/(1+i)
        with ctx40.work():
            one_plus_i = mpmath.mpc(1, 1)
            val = de_halfline(lambda x: mpmath.exp(-one_plus_i * x), ctx40, mpf(10) ** -30)
            assert abs(val - 1 / one_plus_i) < mpf(10) ** -28

    def test_level_cap_raises(self, ctx40):
        with ctx40.work():
            with pytest.raises(AccuracyError):
                de_halfline(lambda x: mpmath.exp(-x), ctx40, mpf(10) ** -60, max_levels=2)
