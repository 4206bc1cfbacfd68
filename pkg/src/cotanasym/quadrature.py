"""Double-exponential quadrature on the half line (0, inf).

The half-line rule is the DE map x = exp(sinh t) with trapezoidal sums in t:
endpoint power behaviour at 0 and exponential decay at infinity are both
flattened into doubly-exponential tail decay.  The step is halved per level,
reusing previous samples, until two successive estimates differ by less than
the requested absolute tolerance; hitting the level cap raises AccuracyError.
Node tables (abscissa, weight) are memoized per (precision, level) behind a
lock.  Integrand tails are cut off once terms drop below the precision floor
10^-(digits+10) relative to the largest term seen.
"""

from __future__ import annotations

import math
import threading
from dataclasses import dataclass
from typing import Callable, Dict, List, Tuple

import mpmath
from mpmath import mpf

from .errors import AccuracyError, InvalidArgumentError

__all__ = ["QuadratureConfig", "de_halfline"]


@dataclass(frozen=True)
class QuadratureConfig:
    """Tolerance and refinement limits for the DE rule.

    target_abs_error may be a float, a string like "1e-40", or an mpf (the
    string/mpf forms survive magnitudes a double cannot represent).
    ray_angle is the contour rotation (radians) used for integrands that
    oscillate on the real ray; the U-integral fixes it at -pi/4.
    """

    target_abs_error: object = 1e-25
    max_levels: int = 12
    ray_angle: float = -math.pi / 4

    def __post_init__(self):
        if not mpf(self.target_abs_error) > 0:
            raise InvalidArgumentError("target_abs_error must be positive")
        if self.max_levels < 1:
            raise InvalidArgumentError("max_levels must be >= 1")

    def tolerance(self) -> mpf:
        return mpf(self.target_abs_error)


_BASE_H = 0.5  # level-0 trapezoid step
_NODE_CACHE: Dict[Tuple[int, int], Dict[int, Tuple[mpf, mpf]]] = {}
_NODE_LOCK = threading.Lock()


def _node(prec: int, level: int, index: int) -> Tuple[mpf, mpf]:
    """Abscissa exp(sinh t) and weight cosh(t) exp(sinh t) at t = index*h."""
    with _NODE_LOCK:
        table = _NODE_CACHE.setdefault((prec, level), {})
        hit = table.get(index)
    if hit is not None:
        return hit
    t = mpf(index) * _BASE_H / (1 << level)
    s = mpmath.sinh(t)
    x = mpmath.exp(s)
    w = mpmath.cosh(t) * x
    with _NODE_LOCK:
        _NODE_CACHE[(prec, level)][index] = (x, w)
    return x, w


def _mag(term) -> mpf:
    """Cheap magnitude proxy (|re| + |im| for complex terms)."""
    if isinstance(term, mpmath.mpc):
        return abs(term.real) + abs(term.imag)
    return abs(term)


def _sweep(f: Callable, prec: int, level: int, indices, floor_ref: List[mpf]):
    """Accumulate w*f(x) over the given node indices of one direction.

    Stops after several consecutive terms below the truncation floor; the
    floor adapts to the largest magnitude seen so far (shared via floor_ref).
    Truncation is suppressed until |t| >= 2 so a sharp interior peak cannot
    be mistaken for a tail.
    """
    acc = mpf(0)
    tiny_run = 0
    min_cover = max(1, int(2.0 / _BASE_H) << level)
    for idx in indices:
        x, w = _node(prec, level, idx)
        term = w * f(x)
        acc += term
        mag = _mag(term)
        if mag > floor_ref[0]:
            floor_ref[0] = mag
        if mag < floor_ref[0] * floor_ref[1] and abs(idx) >= min_cover:
            tiny_run += 1
            if tiny_run >= 4:
                break
        else:
            tiny_run = 0
    return acc


def de_halfline(f: Callable, ctx, target_abs_error, max_levels: int = 12):
    """Integrate f over (0, inf) at ctx precision to the given absolute error.

    f may return mpf or mpc.  Returns the converged estimate; raises
    AccuracyError if the level cap is reached first.
    """
    prec = ctx.prec_bits
    with ctx.work():
        tol = mpf(target_abs_error)
        rel_floor = mpf(10) ** (-(ctx.digits + 10))
        floor_ref = [mpf(0), rel_floor]  # [largest |term| seen, relative floor]

        def count_up(start, step):
            idx = start
            while True:
                yield idx
                idx += step

        h = mpf(_BASE_H)
        x0, w0 = _node(prec, 0, 0)
        total = w0 * f(x0)
        total += _sweep(f, prec, 0, count_up(1, 1), floor_ref)
        total += _sweep(f, prec, 0, count_up(-1, -1), floor_ref)
        estimate = h * total
        for level in range(1, max_levels + 1):
            h = h / 2
            new = _sweep(f, prec, level, count_up(1, 2), floor_ref)
            new += _sweep(f, prec, level, count_up(-1, -2), floor_ref)
            refined = estimate / 2 + h * new
            if abs(refined - estimate) <= tol:
                return refined
            estimate = refined
        raise AccuracyError(
            f"DE quadrature did not reach {target_abs_error} within {max_levels} levels"
        )
