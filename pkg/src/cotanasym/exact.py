"""Exact integer/rational arithmetic layer.

Everything here is exact: arbitrary-size rationals (gmpy2.mpq, falling back to
fractions.Fraction), Bernoulli numbers B_k (B_1 = -1/2 convention), even zeta
values zeta(2l) = (-1)^(l-1) 2^(2l-1) pi^(2l) B_{2l} / (2l)!, the weights
b_k = B_k zeta(k) / k, and the Q[pi^2] polynomial type that carries them.
Numbers only become floating point in the precision layer, never here.
"""

from __future__ import annotations

import math
import threading
from typing import Dict, Iterable, Tuple, Union

import mpmath

from .errors import CacheFormatError, InvalidArgumentError

try:
    from gmpy2 import mpq as Q
    from gmpy2 import mpz as _big_int  # unlimited string conversion
except ImportError:  # pragma: no cover - gmpy2 is a declared dependency
    from fractions import Fraction as Q

    _big_int = int

Rational = Union[int, "Q"]

__all__ = [
    "Q",
    "PiPolynomial",
    "bernoulli",
    "zeta_even",
    "b_coeff",
    "binomial",
    "load_bernoulli_cache",
    "save_bernoulli_cache",
    "max_cached_bernoulli",
]


def binomial(n: int, k: int) -> int:
    """Exact C(n, k) for 0 <= k <= n."""
    if n < 0 or k < 0 or k > n:
        raise InvalidArgumentError(f"binomial requires 0 <= k <= n, got ({n}, {k})")
    return math.comb(n, k)


# ---------------------------------------------------------------------------
# Bernoulli numbers
# ---------------------------------------------------------------------------

_BERN: Dict[int, Q] = {0: Q(1), 1: Q(-1, 2)}
_BERN_LOCK = threading.Lock()


def bernoulli(k: int) -> Q:
    """Exact Bernoulli number B_k (B_1 = -1/2; B_odd = 0 for odd k >= 3).

    Even values come from the von Staudt-Clausen denominator plus a
    zeta-rounded numerator (mpmath.bernfrac); the table grows monotonically
    and is shared process-wide.
    """
    if k < 0:
        raise InvalidArgumentError(f"bernoulli index must be >= 0, got {k}")
    if k >= 3 and k % 2 == 1:
        return Q(0)
    with _BERN_LOCK:
        val = _BERN.get(k)
        if val is None:
            p, q = mpmath.bernfrac(k)
            val = Q(int(p), int(q))
            _BERN[k] = val
    return val


def max_cached_bernoulli() -> int:
    """Largest index currently present in the Bernoulli table."""
    with _BERN_LOCK:
        return max(_BERN)


def load_bernoulli_cache(path) -> int:
    """Load a ``k numerator denominator`` text table into the shared cache.

    A missing file is a cold start, not an error.  Returns the number of
    entries loaded.  Malformed lines raise CacheFormatError with the line
    number.
    """
    try:
        with open(path, "r", encoding="utf-8") as fh:
            lines = fh.readlines()
    except FileNotFoundError:
        return 0
    loaded = {}
    for lineno, line in enumerate(lines, start=1):
        line = line.strip()
        if not line or line.startswith("#"):
            continue
        parts = line.split()
        if len(parts) != 3:
            raise CacheFormatError(path, lineno, f"expected 3 fields, got {len(parts)}")
        try:
            # _big_int: CPython's int() caps string conversion at 4300 digits
            k, num, den = int(parts[0]), _big_int(parts[1]), _big_int(parts[2])
        except ValueError as exc:
            raise CacheFormatError(path, lineno, f"non-integer field: {exc}") from None
        if k < 0 or den <= 0:
            raise CacheFormatError(path, lineno, f"invalid entry k={k}, den={den}")
        loaded[k] = Q(num, den)
    with _BERN_LOCK:
        _BERN.update(loaded)
    return len(loaded)


def save_bernoulli_cache(path, k_max: int = None) -> int:
    """Write the cached Bernoulli table (optionally up to k_max) to disk."""
    with _BERN_LOCK:
        items = sorted((k, v) for k, v in _BERN.items() if k_max is None or k <= k_max)
    with open(path, "w", encoding="utf-8") as fh:
        for k, v in items:
            fh.write(f"{k} {v.numerator} {v.denominator}\n")
    return len(items)


# ---------------------------------------------------------------------------
# Q[pi^2] polynomials
# ---------------------------------------------------------------------------


class PiPolynomial:
    """An exact element of Q[pi^2]: a finite map {m: coefficient of pi^(2m)}.

    Zero coefficients are never stored.  Instances are treated as immutable;
    arithmetic returns new objects.
    """

    __slots__ = ("_coeffs",)

    def __init__(self, coeffs: Dict[int, Rational] = None):
        clean: Dict[int, Q] = {}
        if coeffs:
            for m, c in coeffs.items():
                if m < 0:
                    raise InvalidArgumentError(f"pi^2 exponent must be >= 0, got {m}")
                qc = Q(c) if not isinstance(c, type(Q(0))) else c
                if qc != 0:
                    clean[int(m)] = qc
        self._coeffs = clean

    @classmethod
    def constant(cls, c: Rational) -> "PiPolynomial":
        return cls({0: c})

    @classmethod
    def monomial(cls, m: int, c: Rational) -> "PiPolynomial":
        return cls({m: c})

    def coeff(self, m: int) -> Q:
        return self._coeffs.get(m, Q(0))

    def items(self) -> Iterable[Tuple[int, Q]]:
        return sorted(self._coeffs.items())

    def is_zero(self) -> bool:
        return not self._coeffs

    def max_power(self) -> int:
        """Largest m with a nonzero pi^(2m) coefficient (-1 for the zero poly)."""
        return max(self._coeffs) if self._coeffs else -1

    def __bool__(self) -> bool:
        return bool(self._coeffs)

    def __eq__(self, other) -> bool:
        if isinstance(other, PiPolynomial):
            return self._coeffs == other._coeffs
        if isinstance(other, (int, type(Q(0)))):
            return self == PiPolynomial.constant(other)
        return NotImplemented

    def __hash__(self):
        return hash(tuple(self.items()))

    def __neg__(self) -> "PiPolynomial":
        return PiPolynomial({m: -c for m, c in self._coeffs.items()})

    def __add__(self, other) -> "PiPolynomial":
        if isinstance(other, (int, type(Q(0)))):
            other = PiPolynomial.constant(other)
        if not isinstance(other, PiPolynomial):
            return NotImplemented
        out = dict(self._coeffs)
        for m, c in other._coeffs.items():
            out[m] = out.get(m, Q(0)) + c
        return PiPolynomial(out)

    __radd__ = __add__

    def __sub__(self, other) -> "PiPolynomial":
        return self + (-other if isinstance(other, PiPolynomial) else PiPolynomial.constant(-Q(other)))

    def __mul__(self, other) -> "PiPolynomial":
        if isinstance(other, (int, type(Q(0)))):
            return PiPolynomial({m: c * other for m, c in self._coeffs.items()})
        if not isinstance(other, PiPolynomial):
            return NotImplemented
        out: Dict[int, Q] = {}
        for m1, c1 in self._coeffs.items():
            for m2, c2 in other._coeffs.items():
                m = m1 + m2
                out[m] = out.get(m, Q(0)) + c1 * c2
        return PiPolynomial(out)

    __rmul__ = __mul__

    def format_exact(self) -> str:
        """Render as ``a0 + a1*pi^2 + a2*pi^4 + ...`` with exact fractions."""
        if self.is_zero():
            return "0"
        parts = []
        for m, c in self.items():
            mono = str(c) if m == 0 else f"{c}*pi^{2 * m}"
            parts.append(mono)
        return " + ".join(parts).replace("+ -", "- ")

    def __repr__(self) -> str:
        return f"PiPolynomial({self.format_exact()})"


def zeta_even(l: int) -> PiPolynomial:
    """Exact zeta(2l) as a rational multiple of pi^(2l), l >= 1."""
    if l < 1:
        raise InvalidArgumentError(f"zeta_even requires l >= 1, got {l}")
    k = 2 * l
    coeff = Q((-1) ** (l - 1) * (1 << (k - 1)), math.factorial(k)) * bernoulli(k)
    return PiPolynomial.monomial(l, coeff)


def b_coeff(k: int) -> PiPolynomial:
    """Exact b_k = B_k zeta(k) / k for k >= 2 (the zero polynomial for odd k)."""
    if k < 2:
        raise InvalidArgumentError(f"b_coeff requires k >= 2, got {k}")
    if k % 2 == 1:
        return PiPolynomial()
    l = k // 2
    return zeta_even(l) * (bernoulli(k) / k)
