import math

import pytest

from cotanasym import (
    InvalidArgumentError,
    PiPolynomial,
    Q,
    c_tilde,
    eval_pi_poly,
    hankel,
    lambda_coeff,
    p_poly,
    p_poly_composition,
)
from cotanasym.coeffs import ZPolynomial
from cotanasym.verify import c_tilde_complex

# the six published exact coefficients
CTILDE_FIRST_SIX = {
    0: {0: Q(1)},
    1: {1: Q(1, 3), 0: Q(3, 16)},
    2: {2: Q(1, 18), 1: Q(5, 16), 0: Q(-15, 512)},
    3: {3: Q(1, 162), 2: Q(23, 160), 1: Q(35, 512), 0: Q(105, 8192)},
    4: {4: Q(1, 1944), 3: Q(137, 4320), 2: Q(973, 5120), 1: Q(-105, 8192),
        0: Q(-4725, 524288)},
    5: {5: Q(1, 29160), 4: Q(229, 51840), 3: Q(17365, 193536), 2: Q(2849, 16384),
        1: Q(3465, 524288), 0: Q(72765, 8388608)},
}


class TestHankel:
    def test_k_zero_is_one(self):
        for nu in (0, 1, Q(1, 2), Q(7, 3)):
            assert hankel(nu, 0) == 1

    def test_small_values(self):
        assert hankel(1, 1) == Q(3, 4)
        assert hankel(2, 1) == Q(15, 4)

    def test_half_integer_truncation(self):
        assert all(hankel(Q(1, 2), k) == 0 for k in range(1, 8))

    def test_negative_k_rejected(self):
        with pytest.raises(InvalidArgumentError):
            hankel(1, -1)


class TestLambdaCoeff:
    def test_values(self):
        assert lambda_coeff(1) == Q(1, 12)
        assert lambda_coeff(2) == 0
        assert lambda_coeff(3) == Q(-1, 720)

    def test_no_constant_term(self):
        with pytest.raises(InvalidArgumentError):
            lambda_coeff(0)


class TestPPoly:
    def test_first_polynomials(self):
        assert p_poly(0) == ZPolynomial({0: Q(1)})
        assert p_poly(1) == ZPolynomial({1: Q(-1, 12)})
        assert p_poly(2) == ZPolynomial({2: Q(1, 288)})

    def test_leading_term_law(self):
        for k in range(1, 61):
            assert p_poly(k).coeff(k) == Q((-1) ** k) / (math.factorial(k) * Q(12) ** k)

    def test_parity(self):
        for k in range(1, 61):
            assert all(d % 2 == k % 2 and 1 <= d <= k for d, _ in p_poly(k).items())

    def test_composition_oracle(self):
        for k in range(1, 9):
            assert p_poly(k) == p_poly_composition(k)

    def test_composition_range_capped(self):
        with pytest.raises(InvalidArgumentError):
            p_poly_composition(0)
        with pytest.raises(InvalidArgumentError):
            p_poly_composition(11)


class TestCTilde:
    def test_published_values(self):
        for l, coeffs in CTILDE_FIRST_SIX.items():
            assert c_tilde(l).value == PiPolynomial(coeffs), f"l={l}"

    def test_structural_coefficients(self):
        for l in range(0, 61):
            v = c_tilde(l).value
            assert v.coeff(0) == hankel(1, l) * Q(1, 4**l)
            assert v.coeff(l) == Q(1, math.factorial(l) * 3**l)
            assert not v.is_zero()
            assert v.max_power() <= l

    def test_realness_of_complex_assembly(self):
        for l in range(0, 21):
            real, imag = c_tilde_complex(l)
            assert not imag, f"imaginary residue at l={l}"
            assert real == c_tilde(l).value

    def test_positive_small_indices(self, ctx40):
        for l in range(0, 13):
            assert eval_pi_poly(c_tilde(l).value, ctx40) > 0
