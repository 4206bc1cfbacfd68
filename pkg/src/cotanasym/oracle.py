"""Independent quadrature oracles for g_n - 1/n and the special functions.

Three mutually checking representations are provided:

  * K_1(z) on |arg z| <= pi/4 from the symmetric integral
    K_1(z) = (1/z) int_0^inf exp(-u - z^2/(4u)) du, evaluated on the contour
    rotated along arg z so both ends decay exponentially;
  * Tricomi U(alpha; 0; z) = (1/Gamma(alpha)) int_0^inf e^{-zt} t^{alpha-1}
    (1+t)^{-alpha-1} dt, rotated onto the ray of angle -pi/4 when z is purely
    imaginary so the oscillation turns into exp(-sqrt(2) pi x tau) decay;
  * the divisor-sum reconstruction
    g_n - 1/n = -(4/n!) sum_m d(m) I_n(m),  I_n(m) = (n-1)! n! Re U(n;0;2 pi i m),
    where I_n has the equivalent K-Bessel form
    I_n(x) = 2 x^{-n} Re( sqrt(2 pi i) int_0^inf e^{-u/x}
             K_1(2 sqrt(2 pi i u)) u^{n-1/2} du ),  sqrt(2 pi i) = sqrt(pi)(1+i).

The Mellin identity int_0^inf K_1(u) u^{s-1} du =
2^{s-2} Gamma((s+1)/2) Gamma((s-1)/2) (s > 1) closes the loop on K_1 itself.
"""

from __future__ import annotations

import math

import mpmath
from mpmath import mp, mpc, mpf

from .errors import DomainError, InvalidArgumentError
from .gn import g_exact
from .precision import PrecisionContext, eval_pi_poly, gamma_real
from .quadrature import QuadratureConfig, de_halfline

__all__ = [
    "QuadratureConfig",
    "divisor_count",
    "k_bessel_1",
    "mellin_check",
    "u_tricomi",
    "u_chf",
    "i_n_via_chf",
    "i_n_via_bessel",
    "k1_laplace_pair",
    "gn_oracle",
    "gn_exact_minus_inv_n",
]


def _as_mpf(x) -> mpf:
    """mpf from float/int/str/mpf or an exact rational (one rounding)."""
    try:
        return mpf(x)
    except TypeError:
        return mpf(int(x.numerator)) / mpf(int(x.denominator))


def divisor_count(m: int) -> int:
    """d(m), the number of positive divisors, by trial division to sqrt(m)."""
    if m < 1:
        raise InvalidArgumentError(f"divisor_count requires m >= 1, got {m}")
    count = 0
    d = 1
    while d * d <= m:
        if m % d == 0:
            count += 2 if d * d != m else 1
        d += 1
    return count


def _k1_raw(z: mpc, ctx: PrecisionContext, tol: mpf, max_levels: int) -> mpc:
    r = abs(z)
    direction = z / r  # e^{i arg z}
    c2 = z * r / 4  # z^2 e^{-i arg z} / 4
    scale = mpf(1) if r < 2 else r / 2  # puts the saddle v* = |z|/2 near t = 0

    def integrand(v):
        vs = scale * v
        return scale * mpmath.exp(-direction * vs - c2 / vs)

    return de_halfline(integrand, ctx, tol * r, max_levels) / r


def k_bessel_1(z, ctx: PrecisionContext, q: QuadratureConfig) -> mpc:
    """K_1(z) for z != 0 with |arg z| <= pi/4 (boundary rays included).

    Uses the nu = -1 symmetric integral, rotated along the direction of z:
    K_1(z) = (1/|z|) int_0^inf exp(-(z/|z|) v - z|z|/(4v)) dv.
    """
    with ctx.work():
        zc = mpc(z)
        if zc == 0:
            raise DomainError("k_bessel_1 requires z != 0")
        slack = mpf(2) ** (-ctx.prec_bits // 2)
        if abs(mpmath.arg(zc)) > mp.pi / 4 + slack:
            raise DomainError(f"k_bessel_1 requires |arg z| <= pi/4, got arg = {mpmath.arg(zc)}")
        return _k1_raw(zc, ctx, q.tolerance(), q.max_levels)


def mellin_check(s, ctx: PrecisionContext, q: QuadratureConfig):
    """Both sides of int_0^inf K_1(u) u^{s-1} du = 2^{s-2} G((s+1)/2) G((s-1)/2).

    Valid for s > 1; returns (lhs_by_quadrature, rhs_by_gamma).
    """
    with ctx.work():
        sv = _as_mpf(s)
        if sv <= 1:
            raise DomainError(f"mellin_check requires s > 1, got {s}")
        tol = q.tolerance()
        scale = sv + 1  # integrand peaks near u ~ s + O(1)

        def integrand(u):
            us = scale * u
            factor = us ** (sv - 1)
            # error budget per node scales inversely with the outer factor
            k1 = _k1_raw(mpc(us), ctx, tol / (100 * factor), q.max_levels).real
            return scale * k1 * factor

        lhs = de_halfline(integrand, ctx, tol, q.max_levels)
        rhs = 2 ** (sv - 2) * gamma_real((sv + 1) / 2, ctx) * gamma_real((sv - 1) / 2, ctx)
        return lhs, rhs


def _u_raw(alpha: int, z: mpc, ctx: PrecisionContext, tol: mpf, max_levels: int,
           ray_angle: float) -> mpc:
    if mpmath.re(z) > 0:
        ray = mpc(1)
    else:
        ray = mpmath.expj(mpf(ray_angle))
    z_rot = z * ray
    re_rot = mpmath.re(z_rot)
    # peak of tau^{alpha-1} |1 + ray tau|^{-alpha-1} e^{-re_rot tau}
    scale = max(mpf(1), mpmath.sqrt(alpha / re_rot))
    front = ray**alpha * scale**alpha / mpf(math.factorial(alpha - 1))

    def integrand(v):
        tau = scale * v
        return mpmath.exp(-z_rot * tau) * v ** (alpha - 1) / (1 + ray * tau) ** (alpha + 1)

    val = de_halfline(integrand, ctx, tol / max(mpf(1), abs(front)), max_levels)
    return front * val


def u_tricomi(alpha: int, z, ctx: PrecisionContext, q: QuadratureConfig) -> mpc:
    """Tricomi U(alpha; 0; z) for integer alpha >= 1, Re z >= 0, z != 0.

    For Re z > 0 the defining half-line integral converges as is; for purely
    imaginary z the contour is rotated to the ray of angle q.ray_angle
    (for integer alpha the power (1+t)^{-alpha-1} is single-valued, matching
    the principal branch).
    """
    if alpha < 1:
        raise DomainError(f"u_tricomi requires integer alpha >= 1, got {alpha}")
    with ctx.work():
        zc = mpc(z)
        if zc == 0 or mpmath.re(zc) < 0:
            raise DomainError(f"u_tricomi requires Re z >= 0, z != 0, got {z}")
        return _u_raw(alpha, zc, ctx, q.tolerance(), q.max_levels, q.ray_angle)


def u_chf(alpha: int, x, ctx: PrecisionContext, q: QuadratureConfig) -> mpc:
    """U(alpha; 0; 2 pi i x) for integer alpha >= 1 and real x > 0."""
    if alpha < 1:
        raise DomainError(f"u_chf requires alpha >= 1, got {alpha}")
    with ctx.work():
        xv = _as_mpf(x)
        if xv <= 0:
            raise DomainError(f"u_chf requires x > 0, got {x}")
        return u_tricomi(alpha, mpc(0, 2) * mp.pi * xv, ctx, q)


def i_n_via_chf(n: int, x, ctx: PrecisionContext, q: QuadratureConfig) -> mpf:
    """I_n(x) = (n-1)! n! Re U(n; 0; 2 pi i x) for n >= 2."""
    if n < 2:
        raise InvalidArgumentError(f"i_n_via_chf requires n >= 2, got {n}")
    with ctx.work():
        xv = _as_mpf(x)
        if xv <= 0:
            raise DomainError(f"i_n_via_chf requires x > 0, got {x}")
        fact = mpf(math.factorial(n - 1)) * mpf(math.factorial(n))
        u_val = _u_raw(n, mpc(0, 2) * mp.pi * xv, ctx, q.tolerance() / fact,
                       q.max_levels, q.ray_angle)
        return fact * u_val.real


def i_n_via_bessel(n: int, x, ctx: PrecisionContext, q: QuadratureConfig) -> mpf:
    """I_n(x) from the K-Bessel integral of the divisor-sum representation.

    I_n(x) = 2 x^{-n} Re( sqrt(2 pi i) int_0^inf e^{-u/x} K_1(2 sqrt(2 pi i u))
    u^{n-1/2} du ); the K_1 argument sits on the permitted boundary ray
    arg = pi/4, and sqrt(2 pi i) = sqrt(pi) (1+i).
    """
    if n < 2:
        raise InvalidArgumentError(f"i_n_via_bessel requires n >= 2, got {n}")
    with ctx.work():
        xv = _as_mpf(x)
        if xv <= 0:
            raise DomainError(f"i_n_via_bessel requires x > 0, got {x}")
        sqrt_2pii = mpmath.sqrt(mp.pi) * mpc(1, 1)
        root_dir = mpmath.expjpi(mpf(1) / 4)  # e^{i pi/4}
        prefactor = 2 * xv ** (-n) * abs(sqrt_2pii)
        j_target = q.tolerance() / prefactor
        scale = xv * n  # e^{-u/x} u^{n-1/2} peaks near u = x(n - 1/2)

        def integrand(v):
            u = scale * v
            w = 2 * mpmath.sqrt(2 * mp.pi * u) * root_dir  # arg = pi/4
            factor = mpmath.exp(-u / xv) * u ** (n - mpf(1) / 2)
            # error budget per node scales inversely with the outer factor
            return scale * factor * _k1_raw(w, ctx, j_target / (100 * factor), q.max_levels)

        val = de_halfline(integrand, ctx, j_target, q.max_levels)
        return 2 * xv ** (-n) * (sqrt_2pii * val).real


def k1_laplace_pair(alpha: int, z, ctx: PrecisionContext, q: QuadratureConfig):
    """Both sides of int_0^inf e^{-u} sqrt(zu) K_1(2 sqrt(zu)) u^{alpha-1} du
    = (1/2) Gamma(alpha) Gamma(alpha+1) U(alpha; 0; z), each by quadrature.

    Real z > 0 only (the K_1 argument then stays on the positive axis).
    """
    if alpha < 1:
        raise DomainError(f"k1_laplace_pair requires alpha >= 1, got {alpha}")
    with ctx.work():
        zv = _as_mpf(z)
        if zv <= 0:
            raise DomainError(f"k1_laplace_pair requires real z > 0, got {z}")
        tol = q.tolerance()
        scale = mpf(alpha)  # e^{-u} u^{alpha-1} peaks near u = alpha - 1

        def integrand(v):
            u = scale * v
            w = 2 * mpmath.sqrt(zv * u)
            factor = mpmath.exp(-u) * (w / 2) * u ** (alpha - 1)
            return scale * factor * _k1_raw(mpc(w), ctx, tol / (100 * factor), q.max_levels).real

        lhs = de_halfline(integrand, ctx, tol, q.max_levels)
        fact = mpf(math.factorial(alpha - 1)) * mpf(math.factorial(alpha))
        rhs = fact / 2 * _u_raw(alpha, mpc(zv), ctx, tol * 2 / fact, q.max_levels, q.ray_angle).real
        return lhs, rhs


def gn_oracle(n: int, M: int, ctx: PrecisionContext, q: QuadratureConfig) -> mpf:
    """g_n - 1/n reconstructed as -(4/n!) sum_{m=1}^{M} d(m) I_n(m).

    Truncates early once a term's magnitude falls below target_abs_error/10.
    """
    if n < 2:
        raise InvalidArgumentError(f"gn_oracle requires n >= 2, got {n}")
    if M < 1:
        raise InvalidArgumentError(f"gn_oracle requires M >= 1, got {M}")
    with ctx.work():
        tol = q.tolerance()
        n_fact = mpf(math.factorial(n))
        acc = mpf(0)
        for m in range(1, M + 1):
            dm = divisor_count(m)
            per_term = QuadratureConfig(
                tol * n_fact / (8 * dm * (m + 1) ** 2), q.max_levels, q.ray_angle
            )
            term = -4 / n_fact * dm * i_n_via_chf(n, m, ctx, per_term)
            acc += term
            if abs(term) < tol / 10:
                break
        return acc


def gn_exact_minus_inv_n(n: int, ctx: PrecisionContext) -> mpf:
    """Reference value g_n - 1/n from the exact path, for oracle comparisons."""
    with ctx.work():
        return eval_pi_poly(g_exact(n), ctx) - mpf(1) / n
