"""Taylor coefficients g_n of the reciprocity function, and precision guards.

Exact values follow

    g_0 = -1,  g_1 = 1/2,
    g_n = 1/(n(n+1)) + 2 b_n + 2 sum_{j=0}^{n-2} C(n-1, j) b_{j+2}   (n >= 2),

with b_k = B_k zeta(k)/k, so g_n lives in Q[pi^2].  The terms of the sum grow
to astronomical size while g_n - 1/n is exponentially small, so numeric
evaluation needs the loss-of-significance guards

    G1(n)   = 1/(n(n+1)) + 2|b_n| + 2 sum_j C(n-1, j) |b_{j+2}|   (the l1 mass)
    Ginf(n) = 2 max_j C(n-1, j) |b_{j+2}|

which are computed here purely in the log10 domain (log-gamma + log-sum-exp;
no giant rationals), using |b_{2l}| = (2l)! zeta(2l)^2 / (l (2pi)^{2l}).
"""

from __future__ import annotations

import math
import threading
from dataclasses import dataclass
from typing import Dict, Optional

import numpy as np
from mpmath import mp, mpf
from scipy.special import gammaln, logsumexp

from .errors import DomainError, InsufficientPrecisionError, InvalidArgumentError
from .exact import PiPolynomial, Q, b_coeff, bernoulli
from .precision import PrecisionContext, eval_pi_poly, to_real

__all__ = [
    "GnValue",
    "GuardReport",
    "g_exact",
    "g_numeric",
    "gn_value",
    "guard_G1",
    "guard_Ginf",
    "guard_report",
    "recommend_digits",
    "g_taylor_eval",
    "EXACT_PATH_LIMIT",
]

# below this index g_n is evaluated from its exact Q[pi^2] form; above it the
# same sum runs directly in floating point (one rational->real conversion per
# term) which avoids building squared-Bernoulli rationals
EXACT_PATH_LIMIT = 500

_LN10 = math.log(10.0)
_LN2PI = math.log(2.0 * math.pi)


@dataclass(frozen=True)
class GnValue:
    n: int
    exact: PiPolynomial
    numeric: Optional[mpf] = None
    digits: Optional[int] = None


@dataclass(frozen=True)
class GuardReport:
    n: int
    log10_G1: float
    log10_Ginf: float
    recommended_digits: int


# ---------------------------------------------------------------------------
# exact path
# ---------------------------------------------------------------------------

_G_EXACT_CACHE: Dict[int, PiPolynomial] = {}
_G_EXACT_LOCK = threading.Lock()
_G_EXACT_CACHE_LIMIT = 512


def g_exact(n: int) -> PiPolynomial:
    """Exact g_n as an element of Q[pi^2]."""
    if n < 0:
        raise InvalidArgumentError(f"g_exact requires n >= 0, got {n}")
    if n == 0:
        return PiPolynomial.constant(-1)
    if n == 1:
        return PiPolynomial.constant(Q(1, 2))
    with _G_EXACT_LOCK:
        cached = _G_EXACT_CACHE.get(n)
    if cached is not None:
        return cached
    coeffs: Dict[int, Q] = {0: Q(1, n * (n + 1))}
    # 2 sum_{j=0}^{n-2} C(n-1, j) b_{j+2}; only even j+2 = 2l contribute
    c = 1  # C(n-1, 0)
    for l in range(1, n // 2 + 1):
        j = 2 * l - 2
        bq = b_coeff(2 * l).coeff(l)
        coeffs[l] = coeffs.get(l, Q(0)) + 2 * c * bq
        if j + 2 <= n - 2:
            c = c * (n - 1 - j) // (j + 1)
            c = c * (n - 2 - j) // (j + 2)
    if n % 2 == 0:
        coeffs[n // 2] += 2 * b_coeff(n).coeff(n // 2)
    poly = PiPolynomial(coeffs)
    if n <= _G_EXACT_CACHE_LIMIT:
        with _G_EXACT_LOCK:
            _G_EXACT_CACHE[n] = poly
    return poly


# ---------------------------------------------------------------------------
# numeric path
# ---------------------------------------------------------------------------

# per-precision table of numeric b_{2l}; {prec_bits: {"b": {l: mpf}, ...}}
_B_NUM_CACHE: Dict[int, dict] = {}
_B_NUM_LOCK = threading.Lock()


def _b_numeric_table(l_max: int, ctx: PrecisionContext) -> Dict[int, mpf]:
    """Numeric b_{2l} for l = 1..l_max at ctx precision, cached per precision.

    Each value is assembled exactly (integer numerator/denominator) and
    rounded once: b_{2l} = (-1)^(l-1) * 2^(2l-1) pi^(2l) B_{2l}^2 / (2l (2l)!).
    """
    with _B_NUM_LOCK:
        state = _B_NUM_CACHE.setdefault(
            ctx.prec_bits, {"b": {}, "l": 0, "fact": 1, "pi2l": None}
        )
    with ctx.work():
        if state["pi2l"] is None:
            state["pi2l"] = mpf(1)
        pi2 = mp.pi * mp.pi
        while state["l"] < l_max:
            l = state["l"] + 1
            k = 2 * l
            state["fact"] *= (k - 1) * k  # (2l)!
            state["pi2l"] = state["pi2l"] * pi2
            bq = bernoulli(k)
            num = (int(bq.numerator) ** 2) << (k - 1)
            den = int(bq.denominator) ** 2 * k * state["fact"]
            val = (mpf(num) / mpf(den)) * state["pi2l"]
            state["b"][l] = val if l % 2 == 1 else -val
            state["l"] = l
    return state["b"]


def _g_numeric_direct(n: int, ctx: PrecisionContext) -> mpf:
    bvals = _b_numeric_table(n // 2, ctx)
    with ctx.work():
        acc = mpf(0)
        c = 1  # C(n-1, 0)
        for l in range(1, n // 2 + 1):
            j = 2 * l - 2
            acc += mpf(2 * c) * bvals[l]
            if j + 2 <= n - 2:
                c = c * (n - 1 - j) // (j + 1)
                c = c * (n - 2 - j) // (j + 2)
        if n % 2 == 0:
            acc += 2 * bvals[n // 2]
        acc += to_real(Q(1, n * (n + 1)), ctx)
        return acc


def g_numeric(n: int, ctx: PrecisionContext) -> mpf:
    """Numeric g_n at ctx precision.

    Absolute accuracy is about ctx.digits - log10_G1(n) - 5 decimal digits;
    the precondition ctx.digits >= recommend_digits(n, 10) is enforced.
    """
    if n < 0:
        raise InvalidArgumentError(f"g_numeric requires n >= 0, got {n}")
    needed = recommend_digits(n, 10)
    if ctx.digits < needed:
        raise InsufficientPrecisionError(
            f"g_numeric(n={n}) needs >= {needed} digits, context has {ctx.digits}"
        )
    if n == 0:
        with ctx.work():
            return mpf(-1)
    if n == 1:
        with ctx.work():
            return mpf(1) / 2
    if n <= EXACT_PATH_LIMIT:
        return eval_pi_poly(g_exact(n), ctx)
    return _g_numeric_direct(n, ctx)


def gn_value(n: int, ctx: Optional[PrecisionContext] = None) -> GnValue:
    """Bundle the exact g_n with (optionally) its numeric value."""
    exact = g_exact(n)
    if ctx is None:
        return GnValue(n, exact)
    return GnValue(n, exact, g_numeric(n, ctx), ctx.digits)


# ---------------------------------------------------------------------------
# guards (pure log10-domain floats)
# ---------------------------------------------------------------------------

_ZETA_LN_SMALL: Dict[int, float] = {}


def _zeta_ln(s: int) -> float:
    """ln zeta(s) for even s >= 2, float accuracy ~1e-14 relative."""
    if s <= 40:
        v = _ZETA_LN_SMALL.get(s)
        if v is None:
            v = math.log(_zeta_euler_maclaurin(s))
            _ZETA_LN_SMALL[s] = v
        return v
    # zeta - 1 below 1e-12: two-term tail is ample
    return math.log1p(math.exp(-s * math.log(2.0)) + math.exp(-s * math.log(3.0)))


def _zeta_euler_maclaurin(s: int, terms: int = 64) -> float:
    """Truncated Euler sum with Euler-Maclaurin tail correction."""
    k = np.arange(1, terms + 1, dtype=np.float64)
    total = float(np.sum(k ** (-float(s))))
    K = float(terms)
    total += K ** (1.0 - s) / (s - 1.0) - 0.5 * K ** (-float(s))
    # B_{2j}/(2j)! * (s)_{2j-1} * K^{-s-2j+1}
    bern_over_fact = (1.0 / 12.0, -1.0 / 720.0, 1.0 / 30240.0, -1.0 / 1209600.0)
    rising = float(s)
    power = K ** (-float(s) - 1.0)
    for j, bf in enumerate(bern_over_fact, start=1):
        total += bf * rising * power
        rising *= (s + 2 * j - 1) * (s + 2 * j)
        power /= K * K
    return total


def _log_b_even(ls: np.ndarray) -> np.ndarray:
    """ln |b_{2l}| for an array of l >= 1, via (2l)! zeta(2l)^2 / (l (2pi)^{2l})."""
    twol = 2.0 * ls
    zl = np.array([_zeta_ln(int(s)) for s in (2 * ls).astype(np.int64)])
    return gammaln(twol + 1.0) + 2.0 * zl - np.log(ls) - twol * _LN2PI


def _guard_terms(n: int) -> np.ndarray:
    """ln of the summed guard terms 2 C(n-1, 2l-2) |b_{2l}|, l = 1..n//2."""
    ls = np.arange(1, n // 2 + 1, dtype=np.float64)
    j = 2.0 * ls - 2.0
    log_c = gammaln(float(n)) - gammaln(j + 1.0) - gammaln(float(n) - j)
    return math.log(2.0) + log_c + _log_b_even(ls)


def guard_G1(n: int) -> float:
    """log10 of the l1 guard G1(n), n >= 2."""
    if n < 2:
        raise InvalidArgumentError(f"guard_G1 requires n >= 2, got {n}")
    terms = [_guard_terms(n), np.array([-math.log(n * (n + 1.0))])]
    if n % 2 == 0:
        terms.append(math.log(2.0) + _log_b_even(np.array([n / 2.0])))
    return float(logsumexp(np.concatenate(terms))) / _LN10


def guard_Ginf(n: int) -> float:
    """log10 of the max-term guard Ginf(n), n >= 2."""
    if n < 2:
        raise InvalidArgumentError(f"guard_Ginf requires n >= 2, got {n}")
    return float(np.max(_guard_terms(n))) / _LN10


def recommend_digits(n: int, out_digits: int) -> int:
    """Working precision needed for out_digits absolute digits of g_n."""
    if n < 0:
        raise InvalidArgumentError(f"recommend_digits requires n >= 0, got {n}")
    if out_digits < 1:
        raise InvalidArgumentError(f"out_digits must be >= 1, got {out_digits}")
    return int(math.ceil(guard_G1(max(n, 2)))) + out_digits + 10


def guard_report(n: int, out_digits: int = 10) -> GuardReport:
    return GuardReport(n, guard_G1(n), guard_Ginf(n), recommend_digits(n, out_digits))


# ---------------------------------------------------------------------------
# Taylor series of g near x = 1
# ---------------------------------------------------------------------------


def g_taylor_eval(x, N: int, ctx: PrecisionContext) -> mpf:
    """Partial sum (1/pi) sum_{n=0}^{N} (-1)^n g_n (x-1)^n for rational x.

    Requires |x - 1| < 1 and ctx.digits >= recommend_digits(N, 10).
    """
    xq = Q(x)
    dx = xq - 1
    if dx >= 1 or dx <= -1:
        raise DomainError(f"g_taylor_eval requires |x - 1| < 1, got x = {xq}")
    if N < 0:
        raise InvalidArgumentError(f"truncation order must be >= 0, got {N}")
    needed = recommend_digits(N, 10)
    if ctx.digits < needed:
        raise InsufficientPrecisionError(
            f"g_taylor_eval(N={N}) needs >= {needed} digits, context has {ctx.digits}"
        )
    with ctx.work():
        acc = mpf(0)
        sign_dx_pow = Q(1)  # (-(x-1))^n, exact
        for n in range(0, N + 1):
            acc += eval_pi_poly(g_exact(n), ctx) * to_real(sign_dx_pow, ctx)
            sign_dx_pow *= -dx
        return acc / mp.pi
