"""Direct evaluation of the cotangent sum c(h/k) and of g at rationals.

c(h/k) = - sum_{a=1}^{k-1} (a/k) cot(pi h a / k)  for coprime h, k >= 1,
g(x)   = x c(x) + c(1/x) - 1/(pi Den(x)).

Arguments of cot are reduced exactly: h*a mod k lands in (0, k), so every
angle lies strictly inside (0, pi) and no catastrophic argument reduction
can occur.  Summation is the direct O(k) loop.
"""

from __future__ import annotations

import math
from dataclasses import dataclass

import mpmath
from mpmath import mpf

from .errors import InvalidArgumentError
from .exact import Q
from .precision import PrecisionContext, to_real

__all__ = ["ReducedFraction", "reduce_fraction", "cotangent_sum", "g_direct"]


@dataclass(frozen=True)
class ReducedFraction:
    """A positive rational h/k in lowest terms; k is Den(h/k)."""

    h: int
    k: int

    def __post_init__(self):
        if self.h < 1 or self.k < 1:
            raise InvalidArgumentError(f"need positive h, k; got ({self.h}, {self.k})")
        if math.gcd(self.h, self.k) != 1:
            raise InvalidArgumentError(f"{self.h}/{self.k} is not reduced")

    def as_rational(self) -> Q:
        return Q(self.h, self.k)

    def __str__(self) -> str:
        return f"{self.h}/{self.k}"


def reduce_fraction(p: int, q: int) -> ReducedFraction:
    """Lowest-terms form of p/q for positive integers p, q."""
    if p < 1 or q < 1:
        raise InvalidArgumentError(f"reduce_fraction needs positive integers, got ({p}, {q})")
    g = math.gcd(p, q)
    return ReducedFraction(p // g, q // g)


def cotangent_sum(f: ReducedFraction, ctx: PrecisionContext) -> mpf:
    """c(h/k) = - sum_{a=1}^{k-1} (a/k) cot(pi h a / k); empty sum is 0."""
    h, k = f.h, f.k
    with ctx.work():
        if k == 1:
            return mpf(0)
        pi = +mpmath.pi
        acc = mpf(0)
        for a in range(1, k):
            r = (h * a) % k  # in (0, k) since gcd(h, k) = 1
            angle = pi * to_real(Q(r, k), ctx)
            acc += to_real(Q(a, k), ctx) * mpmath.cot(angle)
        return -acc


def g_direct(f: ReducedFraction, ctx: PrecisionContext) -> mpf:
    """g(h/k) = (h/k) c(h/k) + c(k/h) - 1/(pi k)."""
    with ctx.work():
        x = to_real(f.as_rational(), ctx)
        c_x = cotangent_sum(f, ctx)
        c_inv = cotangent_sum(reduce_fraction(f.k, f.h), ctx)
        return x * c_x + c_inv - 1 / (mpmath.pi * f.k)
