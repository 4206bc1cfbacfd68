import math

import pytest
from hypothesis import given, settings
from hypothesis import strategies as st

from cotanasym import (
    CacheFormatError,
    InvalidArgumentError,
    PiPolynomial,
    Q,
    b_coeff,
    bernoulli,
    binomial,
    load_bernoulli_cache,
    save_bernoulli_cache,
    zeta_even,
)


def bernoulli_by_convolution(k_max):
    """Independent oracle: sum_{j<m} C(m+1, j) B_j = -(m+1) B_m."""
    table = [Q(1)]
    for m in range(1, k_max + 1):
        s = sum(Q(math.comb(m + 1, j)) * table[j] for j in range(m))
        table.append(-s / (m + 1))
    return table


class TestBernoulli:
    def test_small_values(self):
        assert bernoulli(0) == 1
        assert bernoulli(1) == Q(-1, 2)
        assert bernoulli(2) == Q(1, 6)
        assert bernoulli(3) == 0
        assert bernoulli(12) == Q(-691, 2730)

    def test_odd_vanish(self):
        assert all(bernoulli(k) == 0 for k in range(3, 201, 2))

    def test_against_convolution_oracle(self):
        oracle = bernoulli_by_convolution(60)
        for k in range(61):
            assert bernoulli(k) == oracle[k], k

    def test_negative_index_rejected(self):
        with pytest.raises(InvalidArgumentError):
            bernoulli(-1)


class TestZetaEven:
    def test_first_values(self):
        assert zeta_even(1) == PiPolynomial.monomial(1, Q(1, 6))
        assert zeta_even(2) == PiPolynomial.monomial(2, Q(1, 90))
        assert zeta_even(3) == PiPolynomial.monomial(3, Q(1, 945))

    def test_l_zero_rejected(self):
        with pytest.raises(InvalidArgumentError):
            zeta_even(0)


class TestBCoeff:
    def test_examples(self):
        assert b_coeff(2) == PiPolynomial.monomial(1, Q(1, 72))
        assert b_coeff(3).is_zero()
        assert b_coeff(4) == PiPolynomial.monomial(2, Q(-1, 10800))

    def test_k_below_two_rejected(self):
        with pytest.raises(InvalidArgumentError):
            b_coeff(1)

    def test_closed_form_and_sign_to_200(self):
        for l in range(1, 201):
            k = 2 * l
            B = bernoulli(k)
            closed = Q((-1) ** (l - 1) * 2 ** (k - 1), k * math.factorial(k)) * B * B
            assert b_coeff(k) == PiPolynomial.monomial(l, closed)
            assert (closed > 0) == (l % 2 == 1)

    def test_odd_zero(self):
        assert all(b_coeff(k).is_zero() for k in range(3, 101, 2))


class TestBinomial:
    def test_examples(self):
        assert binomial(5, 2) == 10
        assert binomial(7, 0) == 1
        assert binomial(0, 0) == 1

    def test_pascal_oracle_row_100(self):
        row = [1]
        for n in range(1, 101):
            row = [1] + [row[i] + row[i + 1] for i in range(len(row) - 1)] + [1]
        assert [binomial(100, k) for k in range(101)] == row

    def test_invalid(self):
        with pytest.raises(InvalidArgumentError):
            binomial(3, 4)


def poly_strategy():
    coeff = st.builds(Q, st.integers(-60, 60), st.integers(1, 40))
    return st.dictionaries(st.integers(0, 6), coeff, max_size=5).map(PiPolynomial)


class TestPiPolynomial:
    def test_no_zero_coefficients_stored(self):
        p = PiPolynomial({0: Q(0), 1: Q(1, 2)})
        assert p.coeff(0) == 0 and p.items() == [(1, Q(1, 2))]

    def test_format(self):
        assert PiPolynomial({0: Q(1)}).format_exact() == "1"
        assert PiPolynomial({0: Q(3, 16), 1: Q(1, 3)}).format_exact() == "3/16 + 1/3*pi^2"
        assert PiPolynomial({0: Q(-15, 512)}).format_exact() == "-15/512"
        assert PiPolynomial().format_exact() == "0"

    @settings(max_examples=40, deadline=None)
    @given(poly_strategy(), poly_strategy(), poly_strategy())
    def test_ring_axioms(self, a, b, c):
        assert a + b == b + a
        assert a * b == b * a
        assert (a + b) * c == a * c + b * c
        assert (a * b) * c == a * (b * c)
        assert a + PiPolynomial() == a
        assert (a - a).is_zero()

    def test_scalar_ops(self):
        p = PiPolynomial({1: Q(1, 6)})
        assert p * 6 == PiPolynomial({1: Q(1)})
        assert p * Q(1, 2) == PiPolynomial({1: Q(1, 12)})


class TestCacheIO:
    def test_round_trip(self, tmp_path):
        bernoulli(30)
        path = tmp_path / "bern.txt"
        saved = save_bernoulli_cache(path, 30)
        assert saved >= 16
        count = load_bernoulli_cache(path)
        assert count == saved
        text = path.read_text().splitlines()
        assert "2 1 6" in text

    def test_missing_file_is_cold_start(self, tmp_path):
        assert load_bernoulli_cache(tmp_path / "absent.txt") == 0

    def test_corrupt_line_reports_position(self, tmp_path):
        path = tmp_path / "bad.txt"
        path.write_text("2 1 6\nnot a line\n")
        with pytest.raises(CacheFormatError) as err:
            load_bernoulli_cache(path)
        assert err.value.line_number == 2

    def test_bad_denominator_rejected(self, tmp_path):
        path = tmp_path / "bad2.txt"
        path.write_text("4 1 0\n")
        with pytest.raises(CacheFormatError):
            load_bernoulli_cache(path)
