"""Exact asymptotic-expansion coefficients.

The expansion coefficients are assembled from three exact ingredients:

  * Hankel symbols (nu, k) = (1/(2^{2k} k!)) prod_{a=1}^{k} (4 nu^2 - (2a-1)^2),
  * the series lambda(u) = 1/(e^u - 1) - 1/u + 1/2 = sum_{k>=1} B_{k+1}/(k+1)! u^k,
  * the polynomials P_k(z) generated by e^{-z lambda(u)} = sum_k P_k(z) u^k,

combined as

  Ctilde_l = sum_{j+k=l} (k+1, j) (2 pi i)^k P_k(2 pi i) 2^{-2j}.

Every monomial of (2 pi i)^k P_k(2 pi i) has even total weight k + m, so with
(2 pi i)^{2w} = (-1)^w (2 pi)^{2w} the result is an exact element of Q[pi^2];
the fully complex assembly is exercised separately as a cross-check in the
test suite.

P_k is computed by the O(k^2) differential recurrence

  k P_k(z) = -z sum_{j=1}^{k} j lambda_j P_{k-j}(z),    P_0 = 1,

with the exponential-blowup composition sum of the generating function kept
only as a small-k oracle.
"""

from __future__ import annotations

import math
import threading
from dataclasses import dataclass
from typing import Dict, List

from .errors import InvalidArgumentError
from .exact import PiPolynomial, Q, bernoulli

__all__ = [
    "ZPolynomial",
    "CTilde",
    "hankel",
    "lambda_coeff",
    "p_poly",
    "p_poly_composition",
    "c_tilde",
]


class ZPolynomial:
    """Exact polynomial in z over Q: finite map {degree: coefficient}."""

    __slots__ = ("_coeffs",)

    def __init__(self, coeffs: Dict[int, Q] = None):
        clean: Dict[int, Q] = {}
        if coeffs:
            for d, c in coeffs.items():
                qc = Q(c)
                if qc != 0:
                    if d < 0:
                        raise InvalidArgumentError(f"negative degree {d}")
                    clean[int(d)] = qc
        self._coeffs = clean

    def coeff(self, d: int) -> Q:
        return self._coeffs.get(d, Q(0))

    def items(self):
        return sorted(self._coeffs.items())

    def degree(self) -> int:
        return max(self._coeffs) if self._coeffs else -1

    def is_zero(self) -> bool:
        return not self._coeffs

    def __eq__(self, other) -> bool:
        if isinstance(other, ZPolynomial):
            return self._coeffs == other._coeffs
        if isinstance(other, (int, type(Q(0)))):
            other_q = Q(other)
            if other_q == 0:
                return self.is_zero()
            return self._coeffs == {0: other_q}
        return NotImplemented

    def __hash__(self):
        return hash(tuple(self.items()))

    def scaled(self, c) -> "ZPolynomial":
        return ZPolynomial({d: v * c for d, v in self._coeffs.items()})

    def times_z(self) -> "ZPolynomial":
        return ZPolynomial({d + 1: v for d, v in self._coeffs.items()})

    def plus(self, other: "ZPolynomial") -> "ZPolynomial":
        out = dict(self._coeffs)
        for d, v in other._coeffs.items():
            out[d] = out.get(d, Q(0)) + v
        return ZPolynomial(out)

    def __repr__(self):
        if self.is_zero():
            return "ZPolynomial(0)"
        body = " + ".join(f"{c}*z^{d}" if d else str(c) for d, c in self.items())
        return f"ZPolynomial({body})".replace("+ -", "- ")


@dataclass(frozen=True)
class CTilde:
    """Asymptotic coefficient of index l as an exact Q[pi^2] element."""

    l: int
    value: PiPolynomial


def hankel(nu, k: int) -> Q:
    """Hankel symbol (nu, k); exact rational for rational nu."""
    if k < 0:
        raise InvalidArgumentError(f"hankel requires k >= 0, got {k}")
    if k == 0:
        return Q(1)
    nu_q = Q(nu)
    four_nu2 = 4 * nu_q * nu_q
    prod = Q(1)
    for a in range(1, k + 1):
        prod *= four_nu2 - (2 * a - 1) ** 2
    return prod / (Q(2) ** (2 * k) * math.factorial(k))


def lambda_coeff(k: int) -> Q:
    """Coefficient of u^k in lambda(u), i.e. B_{k+1}/(k+1)!; k >= 1."""
    if k < 1:
        raise InvalidArgumentError(f"lambda_coeff requires k >= 1, got {k}")
    return bernoulli(k + 1) / math.factorial(k + 1)


_P_CACHE: List[ZPolynomial] = [ZPolynomial({0: Q(1)})]
_P_LOCK = threading.Lock()


def p_poly(k: int) -> ZPolynomial:
    """P_k(z) by the differential recurrence; exact, memoized."""
    if k < 0:
        raise InvalidArgumentError(f"p_poly requires k >= 0, got {k}")
    with _P_LOCK:
        while len(_P_CACHE) <= k:
            kk = len(_P_CACHE)
            acc = ZPolynomial()
            # lambda_j vanishes for even j >= 2 (odd Bernoulli numbers)
            for j in range(1, kk + 1):
                if j > 1 and j % 2 == 0:
                    continue
                lam = lambda_coeff(j)
                if lam == 0:
                    continue
                acc = acc.plus(_P_CACHE[kk - j].scaled(j * lam))
            _P_CACHE.append(acc.times_z().scaled(Q(-1, kk)))
        return _P_CACHE[k]


def _compositions(total: int, parts: int):
    """All ordered tuples of `parts` positive integers summing to `total`."""
    if parts == 1:
        yield (total,)
        return
    for first in range(1, total - parts + 2):
        for rest in _compositions(total - first, parts - 1):
            yield (first,) + rest


def p_poly_composition(k: int) -> ZPolynomial:
    """P_k(z) by brute-force expansion of exp(-z lambda(u)); 1 <= k <= 10."""
    if not 1 <= k <= 10:
        raise InvalidArgumentError(f"p_poly_composition requires 1 <= k <= 10, got {k}")
    coeffs: Dict[int, Q] = {}
    for l in range(1, k + 1):
        total = Q(0)
        for comp in _compositions(k, l):
            prod = Q(1)
            for part in comp:
                prod *= bernoulli(part + 1) / math.factorial(part + 1)
            total += prod
        val = Q((-1) ** l, math.factorial(l)) * total
        if val != 0:
            coeffs[l] = val
    return ZPolynomial(coeffs)


_CT_CACHE: Dict[int, CTilde] = {}
_CT_LOCK = threading.Lock()


def c_tilde(l: int) -> CTilde:
    """Exact asymptotic coefficient Ctilde_l in Q[pi^2]."""
    if l < 0:
        raise InvalidArgumentError(f"c_tilde requires l >= 0, got {l}")
    with _CT_LOCK:
        cached = _CT_CACHE.get(l)
    if cached is not None:
        return cached
    poly = PiPolynomial()
    for k in range(0, l + 1):
        j = l - k
        front = hankel(k + 1, j) * Q(1, 4**j)
        pk = p_poly(k)
        part: Dict[int, Q] = {}
        for m, c in pk.items():
            w = k + m
            if w % 2 != 0:
                raise AssertionError(f"odd total weight k+m = {w} in P_{k}")
            part[w // 2] = part.get(w // 2, Q(0)) + c * (-1) ** (w // 2) * (1 << w)
        poly = poly + PiPolynomial(part) * front
    out = CTilde(l, poly)
    with _CT_LOCK:
        _CT_CACHE[l] = out
    return out
