import mpmath
import pytest
from mpmath import mp, mpf

from cotanasym import (
    InsufficientPrecisionError,
    InvalidArgumentError,
    PrecisionContext,
    expansion_sum,
    figure_dataset,
    figure_digits,
    figure_quantity,
    l5_amplitude,
    predicted_l5_term,
    residual,
    residual_digits,
)


class TestExpansionSum:
    def test_order_zero_is_main_term(self, ctx50):
        with ctx50.work():
            for n in (1, 10, 250):
                nv = mpf(n)
                root = 2 * mpmath.sqrt(mp.pi * nv)
                main = (
                    2 ** (mpf(9) / 4) * mp.pi ** (mpf(3) / 4) * nv ** (-mpf(3) / 4)
                    * mpmath.exp(-root) * mpmath.sin(root + 3 * mp.pi / 8)
                )
                res = expansion_sum(n, 0, ctx50)
                assert abs(res.sum - main) <= abs(main) * mpf(10) ** -40

    def test_envelope_bound_at_one(self, ctx50):
        with ctx50.work():
            res = expansion_sum(1, 0, ctx50)
            bound = 2 ** (mpf(9) / 4) * mp.pi ** (mpf(3) / 4) * mpmath.exp(-2 * mpmath.sqrt(mp.pi))
            assert abs(res.sum) <= bound

    def test_sum_equals_terms(self, ctx50):
        res = expansion_sum(100, 5, ctx50)
        with ctx50.work():
            assert res.sum == sum(res.terms)
            assert len(res.terms) == 6

    def test_term_envelope_decreasing(self, ctx50):
        for n in (100, 1000):
            res = expansion_sum(n, 5, ctx50)
            # strip the sine: compare envelopes via the coefficient laws
            with ctx50.work():
                env = [
                    abs(t / mpmath.sin(2 * mpmath.sqrt(mp.pi * n) + mp.pi * l / 4 + 3 * mp.pi / 8))
                    for l, t in enumerate(res.terms)
                ]
                assert all(b < a for a, b in zip(env, env[1:]))

    def test_invalid(self, ctx50):
        with pytest.raises(InvalidArgumentError):
            expansion_sum(0, 3, ctx50)
        with pytest.raises(InvalidArgumentError):
            expansion_sum(5, -1, ctx50)


class TestResidual:
    def test_precondition_enforced(self):
        with pytest.raises(InsufficientPrecisionError):
            residual(1000, 3, PrecisionContext(100))

    def test_bound_at_n1000(self):
        ctx = PrecisionContext(residual_digits(1000, 3))
        r = residual(1000, 3, ctx)
        with ctx.work():
            bound = 50 * mpf(1000) ** (-mpf(11) / 4) * mpmath.exp(-2 * mpmath.sqrt(mp.pi * 1000))
            assert abs(r) <= bound

    def test_smoke_small_n(self):
        # order-zero residual at n=10 has the size of the first omitted term
        ctx = PrecisionContext(residual_digits(10, 1))
        r = residual(10, 0, ctx)
        with ctx.work():
            first_omitted = (
                2 ** (mpf(9) / 4) * mp.pi ** (mpf(3) / 4) * mpmath.exp(-2 * mpmath.sqrt(mp.pi * 10))
                * (2 * mp.pi) ** (-mpf(1) / 2) * mpf(10) ** (-mpf(5) / 4)
            )
            assert abs(r) < 10 * 3.4774 * first_omitted  # Ctilde_1 = 3.477...


class TestFigure:
    def test_tracks_predicted_term(self):
        ctx = PrecisionContext(figure_digits(1200))
        for n in (1000, 1100, 1200):
            fq = figure_quantity(n, ctx)
            pred = predicted_l5_term(n, ctx)
            with ctx.work():
                assert abs(fq - pred) <= 50 / mpmath.sqrt(n)

    def test_amplitude_constant(self, ctx50):
        amp = l5_amplitude(ctx50)
        assert mpmath.nstr(amp, 6) == "1.49962"

    def test_predicted_bounded_by_amplitude(self):
        ctx = PrecisionContext(figure_digits(1050))
        rows = figure_dataset(1000, 1050, 10, ctx)
        assert len(rows) == 6
        with ctx.work():
            assert all(abs(pred) <= mpf("1.49963") for _, _, pred in rows)

    def test_row_count(self):
        ctx = PrecisionContext(figure_digits(1010))
        rows = figure_dataset(1000, 1010, 1, ctx)
        assert [r[0] for r in rows] == list(range(1000, 1011))

    def test_grid_validation(self):
        with pytest.raises(InvalidArgumentError):
            figure_dataset(1, 10, 1, PrecisionContext(50))
        with pytest.raises(InvalidArgumentError):
            figure_dataset(10, 5, 1, PrecisionContext(50))
