"""Arbitrary-precision numeric substrate on top of mpmath (gmpy backend).

A PrecisionContext fixes the working precision in decimal digits; the binary
precision is over-provisioned (ceil(digits*log2(10)) + 32 bits) so that
decimal-digit accuracy statements survive rounding.  All operations run the
underlying mpmath arithmetic inside a ``workprec`` block and return plain
``mpf``/``mpc`` values (immutable, context-free storage: an mpf keeps its
exact mantissa; precision applies at operation time).

Rational -> real conversion happens once per term, after all exact
arithmetic; eval_pi_poly converts each exact coefficient exactly once.
"""

from __future__ import annotations

import math
from dataclasses import dataclass, field

import mpmath
from mpmath import mp, mpc, mpf

from .errors import DomainError, InvalidArgumentError
from .exact import PiPolynomial, Q

__all__ = [
    "PrecisionContext",
    "BigReal",
    "BigComplex",
    "make_context",
    "pi_value",
    "gamma_real",
    "eval_pi_poly",
    "to_real",
    "ensure_finite",
]

BigReal = mpf
BigComplex = mpc

_LOG2_10 = math.log2(10)


@dataclass(frozen=True)
class PrecisionContext:
    """Working precision: significant decimal digits, nearest-ties-even."""

    digits: int
    rounding: str = field(default="nearest-even", compare=False)

    def __post_init__(self):
        if not isinstance(self.digits, int) or self.digits < 1:
            raise InvalidArgumentError(f"digits must be a positive integer, got {self.digits!r}")

    @property
    def prec_bits(self) -> int:
        return int(math.ceil(self.digits * _LOG2_10)) + 32

    def work(self):
        """Context manager installing this precision for a block of ops."""
        return mp.workprec(self.prec_bits)

    def eps(self) -> mpf:
        """10^(-digits), the decimal resolution of this context."""
        with self.work():
            return mpf(10) ** (-self.digits)


def make_context(digits: int) -> PrecisionContext:
    return PrecisionContext(digits)


def ensure_finite(x):
    """Reject NaN/inf escaping a numeric operation."""
    if isinstance(x, mpc):
        ensure_finite(x.real)
        ensure_finite(x.imag)
        return x
    if not mpmath.isfinite(x):
        raise DomainError(f"non-finite numeric result: {x}")
    return x


def pi_value(ctx: PrecisionContext) -> mpf:
    """pi correct to ctx.digits."""
    with ctx.work():
        return +mp.pi


def gamma_real(x, ctx: PrecisionContext) -> mpf:
    """Gamma(x) for real x > 0."""
    with ctx.work():
        xv = to_real(x, ctx) if isinstance(x, (int, type(Q(0)))) else mpf(x)
        if xv <= 0:
            raise DomainError(f"gamma_real requires x > 0, got {x}")
        return ensure_finite(mpmath.gamma(xv))


def to_real(q, ctx: PrecisionContext) -> mpf:
    """One rounding of an exact rational (or int) into ctx's precision."""
    with ctx.work():
        num = getattr(q, "numerator", None)
        if num is None:
            return mpf(q)
        den = q.denominator
        if den == 1:
            return mpf(int(num))
        return mpf(int(num)) / mpf(int(den))


def eval_pi_poly(p: PiPolynomial, ctx: PrecisionContext) -> mpf:
    """Numeric value of an exact Q[pi^2] element at ctx precision.

    Horner evaluation in pi^2, descending powers; each exact coefficient is
    converted to floating point exactly once.
    """
    if p.is_zero():
        with ctx.work():
            return mpf(0)
    with ctx.work():
        pi2 = mp.pi * mp.pi
        acc = mpf(0)
        prev_m = None
        for m, c in sorted(p.items(), reverse=True):
            if prev_m is not None:
                for _ in range(prev_m - m):
                    acc *= pi2
            acc += to_real(c, ctx)
            prev_m = m
        for _ in range(prev_m):
            acc *= pi2
        return ensure_finite(acc)
