import math

import mpmath
import pytest
from hypothesis import given, settings
from hypothesis import strategies as st
from mpmath import mpf

from cotanasym import (
    InvalidArgumentError,
    ReducedFraction,
    cotangent_sum,
    g_direct,
    pi_value,
    reduce_fraction,
)

from conftest import assert_close


class TestReduce:
    def test_examples(self):
        assert reduce_fraction(4, 6) == ReducedFraction(2, 3)
        assert reduce_fraction(7, 1) == ReducedFraction(7, 1)
        assert reduce_fraction(10, 5) == ReducedFraction(2, 1)

    def test_zero_rejected(self):
        with pytest.raises(InvalidArgumentError):
            reduce_fraction(0, 3)
        with pytest.raises(InvalidArgumentError):
            reduce_fraction(3, 0)

    def test_unreduced_constructor_rejected(self):
        with pytest.raises(InvalidArgumentError):
            ReducedFraction(2, 4)


class TestCotangentSum:
    def test_integer_arguments_empty_sum(self, ctx50):
        assert cotangent_sum(ReducedFraction(1, 1), ctx50) == 0
        assert cotangent_sum(ReducedFraction(5, 1), ctx50) == 0

    def test_half(self, ctx50):
        # single term with cot(pi/2) = 0
        with ctx50.work():
            assert abs(cotangent_sum(ReducedFraction(1, 2), ctx50)) < mpf(10) ** -45

    def test_third(self, ctx50):
        # two terms: -(1/3)cot(pi/3) - (2/3)cot(2pi/3) = 1/(3 sqrt(3))
        with ctx50.work():
            expected = 1 / (3 * mpmath.sqrt(mpf(3)))
            assert_close(cotangent_sum(ReducedFraction(1, 3), ctx50), expected,
                         mpf(10) ** -45, "c(1/3)")
            assert_close(cotangent_sum(ReducedFraction(2, 3), ctx50), -expected,
                         mpf(10) ** -45, "c(2/3)")

    @settings(max_examples=30, deadline=None)
    @given(st.integers(2, 40), st.integers(1, 200))
    def test_periodicity_and_oddness(self, k, h_raw):
        from cotanasym import PrecisionContext

        h = h_raw % k
        if h == 0 or math.gcd(h, k) != 1:
            return
        ctx = PrecisionContext(40)
        with ctx.work():
            tol = mpf(10) ** -34
            c = cotangent_sum(ReducedFraction(h, k), ctx)
            assert abs(cotangent_sum(reduce_fraction(h + k, k), ctx) - c) < tol
            assert abs(cotangent_sum(ReducedFraction(k - h, k), ctx) + c) < tol


class TestGDirect:
    def test_at_one(self, ctx50):
        with ctx50.work():
            assert_close(g_direct(ReducedFraction(1, 1), ctx50), -1 / pi_value(ctx50),
                         mpf(10) ** -45, "g(1)")

    def test_at_two(self, ctx50):
        with ctx50.work():
            assert_close(g_direct(ReducedFraction(2, 1), ctx50), -1 / pi_value(ctx50),
                         mpf(10) ** -45, "g(2)")

    def test_symmetry_relation(self, ctx50):
        # g(x) = x c(x) + c(1/x) - 1/(pi k) with both sums explicit at 3/2
        with ctx50.work():
            f = ReducedFraction(3, 2)
            lhs = g_direct(f, ctx50)
            rhs = (
                mpf(3) / 2 * cotangent_sum(f, ctx50)
                + cotangent_sum(ReducedFraction(2, 3), ctx50)
                - 1 / (pi_value(ctx50) * 2)
            )
            assert lhs == rhs
