"""Numeric evaluation of the truncated asymptotic expansion and residuals.

The truncated expansion approximating g_n - 1/n is

  S_L(n) = 2^{9/4} pi^{3/4} e^{-2 sqrt(pi n)}
           sum_{l=0}^{L} (2 pi)^{-l/2} Ctilde_l n^{-l/2 - 3/4}
           sin(2 sqrt(pi n) + pi l/4 + 3 pi/8),

with error O(n^{-L/2 - 5/4} e^{-2 sqrt(pi n)}).  residual(n, L) evaluates
g_n - 1/n - S_L(n); figure_quantity rescales residual(n, 4) so that it tends
to (2 pi)^{-5/2} Ctilde_5 sin(2 sqrt(pi n) + 13 pi/8) + O(n^{-1/2}).

The inner phase is 3 pi/8 throughout: it is the only choice consistent with
the l = 5 limit phase 13 pi/8 = 5 pi/4 + 3 pi/8 and the observed amplitude.

Everything, including e^{2 sqrt(pi n)}, runs at full working precision: the
rescaling magnifies any g_n error by e^{2 sqrt(pi n)}, so residual-path
contexts must provision ceil(G1(n)) + 2 sqrt(pi n) log10(e) + O(log n) digits
(see residual_digits / figure_digits).  recommend_digits(n, 20) alone is a
floor, not enough to resolve the residual.
"""

from __future__ import annotations

import math
import threading
from dataclasses import dataclass
from typing import Dict, List, Optional, Tuple

import mpmath
from mpmath import mp, mpf

from .coeffs import c_tilde
from .errors import InsufficientPrecisionError, InvalidArgumentError
from .gn import g_numeric, recommend_digits
from .precision import PrecisionContext, eval_pi_poly

__all__ = [
    "ExpansionResult",
    "expansion_sum",
    "residual",
    "figure_quantity",
    "predicted_l5_term",
    "figure_dataset",
    "residual_digits",
    "figure_digits",
    "l5_amplitude",
]

_LOG10_E = math.log10(math.e)


@dataclass(frozen=True)
class ExpansionResult:
    n: int
    L: int
    sum: mpf
    terms: Tuple[mpf, ...]


_CT_NUM_CACHE: Dict[Tuple[int, int], mpf] = {}
_CT_NUM_LOCK = threading.Lock()


def _c_tilde_numeric(l: int, ctx: PrecisionContext) -> mpf:
    key = (l, ctx.prec_bits)
    with _CT_NUM_LOCK:
        val = _CT_NUM_CACHE.get(key)
    if val is None:
        val = eval_pi_poly(c_tilde(l).value, ctx)
        with _CT_NUM_LOCK:
            _CT_NUM_CACHE[key] = val
    return val


def expansion_sum(n: int, L: int, ctx: PrecisionContext) -> ExpansionResult:
    """S_L(n): the expansion truncated after l = L, with per-l terms."""
    if n < 1:
        raise InvalidArgumentError(f"expansion_sum requires n >= 1, got {n}")
    if L < 0:
        raise InvalidArgumentError(f"expansion_sum requires L >= 0, got {L}")
    with ctx.work():
        nv = mpf(n)
        root = 2 * mpmath.sqrt(mp.pi * nv)
        prefactor = 2 ** (mpf(9) / 4) * mp.pi ** (mpf(3) / 4) * mpmath.exp(-root)
        two_pi = 2 * mp.pi
        terms: List[mpf] = []
        total = mpf(0)
        for l in range(0, L + 1):
            phase = root + mp.pi * l / 4 + 3 * mp.pi / 8
            term = (
                prefactor
                * two_pi ** (-mpf(l) / 2)
                * _c_tilde_numeric(l, ctx)
                * nv ** (-mpf(l) / 2 - mpf(3) / 4)
                * mpmath.sin(phase)
            )
            terms.append(term)
            total += term
        return ExpansionResult(n, L, total, tuple(terms))


def residual(n: int, L: int, ctx: PrecisionContext) -> mpf:
    """g_n - 1/n - S_L(n) at ctx precision.

    Enforces the documented floor ctx.digits >= recommend_digits(n, 20); for
    a resolved residual use residual_digits(n, L) digits or more.
    """
    needed = recommend_digits(max(n, 2), 20)
    if ctx.digits < needed:
        raise InsufficientPrecisionError(
            f"residual(n={n}) needs >= {needed} digits, context has {ctx.digits}"
        )
    with ctx.work():
        gn = g_numeric(n, ctx)
        return gn - mpf(1) / n - expansion_sum(n, L, ctx).sum


def residual_digits(n: int, L: int = 5, out_digits: int = 20) -> int:
    """Working precision that resolves residual(n, L) to ~out_digits digits."""
    below_one = 2.0 * math.sqrt(math.pi * n) * _LOG10_E + (L / 2 + 1.25) * math.log10(max(n, 2))
    return recommend_digits(n, out_digits) + int(math.ceil(below_one)) + 10


def figure_digits(n: int, out_digits: int = 12) -> int:
    """Working precision for figure_quantity(n) to ~out_digits digits."""
    return residual_digits(n, 4, out_digits)


def figure_quantity(n: int, ctx: PrecisionContext) -> mpf:
    """n^{5/2} (2^{-9/4} pi^{-3/4} n^{3/4} e^{2 sqrt(pi n)} (g_n - 1/n)
    - sum_{l<=4} (2 pi)^{-l/2} Ctilde_l n^{-l/2} sin(2 sqrt(pi n) + pi l/4 + 3 pi/8)),

    i.e. the residual after four correction terms, rescaled to expose the
    l = 5 term."""
    if n < 1:
        raise InvalidArgumentError(f"figure_quantity requires n >= 1, got {n}")
    with ctx.work():
        nv = mpf(n)
        res4 = residual(n, 4, ctx)
        rescale = (
            nv ** (mpf(5) / 2)
            * 2 ** (-mpf(9) / 4)
            * mp.pi ** (-mpf(3) / 4)
            * nv ** (mpf(3) / 4)
            * mpmath.exp(2 * mpmath.sqrt(mp.pi * nv))
        )
        return rescale * res4


def predicted_l5_term(n: int, ctx: PrecisionContext) -> mpf:
    """(2 pi)^{-5/2} Ctilde_5 sin(2 sqrt(pi n) + 13 pi/8), the limit curve."""
    with ctx.work():
        nv = mpf(n)
        phase = 2 * mpmath.sqrt(mp.pi * nv) + 13 * mp.pi / 8
        return (2 * mp.pi) ** (-mpf(5) / 2) * _c_tilde_numeric(5, ctx) * mpmath.sin(phase)


def l5_amplitude(ctx: PrecisionContext) -> mpf:
    """The envelope constant (2 pi)^{-5/2} Ctilde_5 = 1.49962..."""
    with ctx.work():
        return (2 * mp.pi) ** (-mpf(5) / 2) * _c_tilde_numeric(5, ctx)


def figure_dataset(
    n_start: int,
    n_end: int,
    step: int = 1,
    ctx: Optional[PrecisionContext] = None,
) -> List[Tuple[int, mpf, mpf]]:
    """Rows (n, figure_quantity(n), predicted_l5_term(n)) over a grid.

    With ctx=None a single context sized for the largest n is used for every
    row, which shares the per-precision b-value cache across rows.
    """
    if n_start < 2 or n_end < n_start:
        raise InvalidArgumentError(f"need 2 <= n_start <= n_end, got [{n_start}, {n_end}]")
    if step < 1:
        raise InvalidArgumentError(f"step must be >= 1, got {step}")
    if ctx is None:
        ctx = PrecisionContext(figure_digits(n_end))
    rows = []
    for n in range(n_start, n_end + 1, step):
        rows.append((n, figure_quantity(n, ctx), predicted_l5_term(n, ctx)))
    return rows
