"""Self-contained property suite behind the `verify` CLI subcommand.

Each check re-derives an invariant from an independent route (recurrences,
symmetry identities, two-representation agreement, scaling laws) and reports
one PASS/FAIL line.  `fast=True` trims grids to keep the whole run in a
couple of minutes; the full run re-checks everything at the documented
ranges.
"""

from __future__ import annotations

import math
from typing import Callable, Dict, List, Tuple

import mpmath
from mpmath import mp, mpf

from . import asym, coeffs, cotangent, exact, gn, oracle, precision
from .exact import PiPolynomial, Q


def c_tilde_complex(l: int) -> Tuple[PiPolynomial, Dict[int, Q]]:
    """Coefficient assembled the long way: real Q[pi^2] part plus whatever
    imaginary pi-weight coefficients survive (they must all cancel).

    Keeps every factor of i explicit (Gaussian-rational coefficients of pi
    powers) instead of using the even-weight shortcut.
    """
    # polynomials in pi (not pi^2): {weight w: coeff of pi^w}
    re_w: Dict[int, Q] = {}
    im_w: Dict[int, Q] = {}
    for k in range(0, l + 1):
        j = l - k
        front = coeffs.hankel(k + 1, j) * Q(1, 4**j)
        for m, c in coeffs.p_poly(k).items():
            w = k + m
            # (2 pi i)^w = 2^w pi^w i^w
            coeff = front * c * (1 << w)
            target = re_w if w % 2 == 0 else im_w
            sign = 1 if (w % 4) in (0, 1) else -1
            target[w] = target.get(w, Q(0)) + sign * coeff
    real = PiPolynomial({w // 2: c for w, c in re_w.items() if c != 0})
    imag = {w: c for w, c in im_w.items() if c != 0}
    return real, imag


def _nd(x, d=10):
    return mpmath.nstr(x, d)


def _coprime_pairs(k_max: int):
    for k in range(2, k_max + 1):
        for h in range(1, k):
            if math.gcd(h, k) == 1:
                yield h, k


def build_checks(fast: bool) -> List[Tuple[str, Callable[[], Tuple[bool, str]]]]:
    checks: List[Tuple[str, Callable[[], Tuple[bool, str]]]] = []
    add = lambda name, fn: checks.append((name, fn))

    # -- exact arithmetic ---------------------------------------------------
    def bernoulli_basics():
        ok = exact.bernoulli(1) == Q(-1, 2) and exact.bernoulli(12) == Q(-691, 2730)
        ok = ok and all(exact.bernoulli(k) == 0 for k in range(3, 100, 2))
        # independent convolution recurrence sum_{j<k} C(k+1, j) B_j = 0
        upto = 40 if fast else 80
        B = [Q(1)]
        for m in range(1, upto + 1):
            s = sum(Q(math.comb(m + 1, j)) * B[j] for j in range(m))
            B.append(-s / (m + 1))
        ok = ok and all(B[k] == exact.bernoulli(k) for k in range(upto + 1))
        return ok, f"convolution oracle to k={upto}"

    add("bernoulli-basics", bernoulli_basics)

    def b_closed_form():
        upto = 60 if fast else 200
        for l in range(1, upto + 1):
            k = 2 * l
            B = exact.bernoulli(k)
            closed = Q((-1) ** (l - 1) * (1 << (k - 1)), k * math.factorial(k)) * B * B
            if exact.b_coeff(k) != PiPolynomial.monomial(l, closed):
                return False, f"mismatch at 2l={k}"
            if (closed > 0) != (l % 2 == 1):
                return False, f"sign law fails at 2l={k}"
        return True, f"b_{{2l}} closed form + sign to l={upto}"

    add("b-closed-form", b_closed_form)

    def pi_identity():
        for digits in (50, 200):
            ctx = precision.PrecisionContext(digits)
            with ctx.work():
                if abs(mpmath.sin(precision.pi_value(ctx))) >= mpf(10) ** (-digits + 2):
                    return False, f"sin(pi) too large at {digits} digits"
        return True, "|sin(pi)| < 10^(2-digits)"

    add("pi-sin-identity", pi_identity)

    def pipoly_two_contexts():
        polys = [coeffs.c_tilde(l).value for l in range(0, 12)]
        polys += [exact.zeta_even(5), exact.b_coeff(20), gn.g_exact(8)]
        d = 60
        for p in polys:
            a = precision.eval_pi_poly(p, precision.PrecisionContext(d))
            b = precision.eval_pi_poly(p, precision.PrecisionContext(d + 20))
            with mp.workdps(d + 30):
                if a != 0 and abs(a - b) > abs(b) * mpf(10) ** (-(d - 5)):
                    return False, f"disagreement for {p!r}"
        return True, f"{len(polys)} well-conditioned polynomials at {d}/{d+20} digits"

    add("pipoly-two-contexts", pipoly_two_contexts)

    # -- guards -------------------------------------------------------------
    def guards_monotone():
        # G1(2) > G1(3) is a genuine counterexample (the standalone 2|b_n|
        # term coincides with the j = n-2 term only at n = 2), so the
        # monotone range starts at n = 3
        top = 2000 if fast else 10001
        ns = list(range(3, 130)) + list(range(130, top + 1, 97))
        g1 = [gn.guard_G1(n) for n in ns]
        gi = [gn.guard_Ginf(n) for n in ns]
        ok = all(b >= a for a, b in zip(g1, g1[1:])) and all(b >= a for a, b in zip(gi, gi[1:]))
        ok = ok and all(i <= s for s, i in zip(g1 + [gn.guard_G1(2)], gi + [gn.guard_Ginf(2)]))
        return ok, f"nondecreasing on 3 <= n <= {top} ({len(ns)} points); Ginf <= G1 incl. n=2"

    add("guards-monotone", guards_monotone)

    def guards_consistency():
        top = 60 if fast else 200
        ctx = precision.PrecisionContext(40)
        for n in range(2, top + 1, 3):
            ln_terms = gn._guard_terms(n)  # ln of 2 C(n-1, 2l-2) |b_{2l}|
            c = 1
            for l in range(1, n // 2 + 1):
                j = 2 * l - 2
                coeff = 2 * c * abs(exact.b_coeff(2 * l).coeff(l))
                exact_ln = float(
                    mpmath.log(precision.eval_pi_poly(PiPolynomial.monomial(l, coeff), ctx))
                )
                # ln-difference equals relative error of the linear values
                if abs(exact_ln - float(ln_terms[l - 1])) > 1e-10:
                    return False, f"term (n={n}, l={l}) differs beyond 10 digits"
                if j + 2 <= n - 2:
                    c = c * (n - 1 - j) // (j + 1)
                    c = c * (n - 2 - j) // (j + 2)
        return True, f"every exact term matches the log-domain path to 10 digits, n <= {top}"

    add("guards-consistency", guards_consistency)

    def gn_odd_weight():
        for n in range(2, 101):
            if any(2 * m > n for m, _ in gn.g_exact(n).items()):
                return False, f"weight violation at n={n}"
        return True, "monomial weights 2m <= n for n <= 100"

    add("gn-structure", gn_odd_weight)

    def gn_precision_scaling():
        ns = (60, 300) if fast else (60, 300, 700)
        for n in ns:
            d = gn.recommend_digits(n, 30)
            a = gn.g_numeric(n, precision.PrecisionContext(d))
            b = gn.g_numeric(n, precision.PrecisionContext(d + 50))
            with mp.workdps(d + 60):
                allowed = mpf(10) ** (-(d - math.ceil(gn.guard_G1(n)) - 10))
                if abs(a - b) > allowed:
                    return False, f"n={n}: |diff|={_nd(abs(a - b))} > {_nd(allowed)}"
        return True, f"agreement to d - ceil(G1) - 10 digits for n in {ns}"

    add("gn-precision-scaling", gn_precision_scaling)

    # -- cotangent ----------------------------------------------------------
    def cot_symmetries():
        k_max = 20 if fast else 50
        ctx = precision.PrecisionContext(40)
        with ctx.work():
            tol = mpf(10) ** (-35)
            for h, k in _coprime_pairs(k_max):
                c = cotangent.cotangent_sum(cotangent.ReducedFraction(h, k), ctx)
                per = cotangent.cotangent_sum(cotangent.reduce_fraction(h + k, k), ctx)
                odd = cotangent.cotangent_sum(cotangent.ReducedFraction(k - h, k), ctx) if k - h >= 1 else None
                if abs(per - c) > tol:
                    return False, f"periodicity fails at {h}/{k}"
                if odd is not None and abs(odd + c) > tol:
                    return False, f"oddness fails at {h}/{k}"
        return True, f"periodicity + oddness for all coprime h/k, k <= {k_max}"

    add("cot-symmetries", cot_symmetries)

    def reciprocity():
        qs = range(3, 9) if fast else range(3, 13)
        N = 80
        ctx = precision.PrecisionContext(max(gn.recommend_digits(N, 10), 120))
        with ctx.work():
            pi = precision.pi_value(ctx)
            for qden in qs:
                gd = cotangent.g_direct(cotangent.ReducedFraction(qden + 1, qden), ctx)
                gt = gn.g_taylor_eval(Q(qden + 1, qden), N, ctx)
                bound = 10 * (mpf(1) / qden) ** (N + 1)
                if abs(pi * (gd - gt)) > bound:
                    return False, f"q={qden}: {_nd(abs(pi * (gd - gt)))} > {_nd(bound)}"
        return True, f"|pi (g_direct - taylor_N)| <= 10 q^-(N+1) for q in {list(qs)}"

    add("reciprocity", reciprocity)

    # -- expansion coefficients ----------------------------------------------
    def pk_laws():
        for k in range(1, 9):
            if coeffs.p_poly(k) != coeffs.p_poly_composition(k):
                return False, f"composition oracle differs at k={k}"
        for k in range(1, 61):
            p = coeffs.p_poly(k)
            if any(d % 2 != k % 2 or not 1 <= d <= k for d, _ in p.items()):
                return False, f"parity fails at k={k}"
            if p.coeff(k) != Q((-1) ** k) / (math.factorial(k) * Q(12) ** k):
                return False, f"leading term fails at k={k}"
        return True, "composition k<=8; parity + leading term k<=60"

    add("pk-laws", pk_laws)

    def ctilde_structure():
        top = 30 if fast else 60
        for l in range(top + 1):
            v = coeffs.c_tilde(l).value
            if v.is_zero():
                return False, f"vanishing coefficient at l={l}"
            if v.coeff(0) != coeffs.hankel(1, l) * Q(1, 4**l):
                return False, f"pi^0 law fails at l={l}"
            if v.coeff(l) != Q(1, math.factorial(l) * 3**l):
                return False, f"pi^(2l) law fails at l={l}"
            if v.max_power() > l:
                return False, f"weight overflow at l={l}"
        return True, f"pi^0 and pi^(2l) coefficient laws to l={top}"

    add("ctilde-structure", ctilde_structure)

    def ctilde_realness():
        top = 20 if fast else 60
        for l in range(top + 1):
            real, imag = c_tilde_complex(l)
            if imag:
                return False, f"imaginary residue at l={l}"
            if real != coeffs.c_tilde(l).value:
                return False, f"complex path disagrees at l={l}"
        return True, f"complex assembly real and identical to l={top}"

    add("ctilde-realness", ctilde_realness)

    def ctilde_sign():
        ctx = precision.PrecisionContext(60)
        vals = [precision.eval_pi_poly(coeffs.c_tilde(l).value, ctx) for l in range(51)]
        ok = all(v > 0 for v in vals[:50]) and vals[50] < 0
        return ok, "positive through l=49, first negative at l=50"

    if not fast:
        add("ctilde-sign", ctilde_sign)

    # -- asymptotics ----------------------------------------------------------
    def term_envelope():
        ctx = precision.PrecisionContext(60)
        with ctx.work():
            for n in (100, 1000):
                env = []
                nv = mpf(n)
                for l in range(6):
                    env.append(
                        (2 * mp.pi) ** (-mpf(l) / 2)
                        * abs(precision.eval_pi_poly(coeffs.c_tilde(l).value, ctx))
                        * nv ** (-mpf(l) / 2 - mpf(3) / 4)
                    )
                if any(b >= a for a, b in zip(env, env[1:])):
                    return False, f"envelope not decreasing at n={n}"
        return True, "per-term envelope strictly decreasing, l <= 5, n in (100, 1000)"

    add("term-envelope", term_envelope)

    def phase_reparametrization():
        # the odd-index form C_k n^(-k/4) sin(2 sqrt(pi n) + pi k/8), k = licensed 2l+3,
        # must reproduce each term of the half-integer form exactly
        n = 500
        ctx = precision.PrecisionContext(asym.residual_digits(n, 5))
        res = asym.expansion_sum(n, 5, ctx)
        with ctx.work():
            nv = mpf(n)
            root = 2 * mpmath.sqrt(mp.pi * nv)
            for l, term in enumerate(res.terms):
                k = 2 * l + 3
                ck = (
                    2 ** (mpf(9) / 4)
                    * mp.pi ** (mpf(3) / 4)
                    * (2 * mp.pi) ** (-mpf(k - 3) / 4)
                    * precision.eval_pi_poly(coeffs.c_tilde(l).value, ctx)
                )
                alt = mpmath.exp(-root) * ck * nv ** (-mpf(k) / 4) * mpmath.sin(root + mp.pi * k / 8)
                if abs(alt - term) > abs(term) * mpf(10) ** (-ctx.digits + 15):
                    return False, f"l={l} reparametrized term differs"
        return True, "odd-index reparametrization matches term by term at n=500"

    add("phase-reparametrization", phase_reparametrization)

    def scaled_residual_bounded():
        Ls = (0, 3) if fast else (0, 1, 3, 5)
        top = 1000 if fast else 2000
        ns = list(range(500, top + 1, 100))
        ctx = precision.PrecisionContext(asym.residual_digits(top, max(Ls)))
        with ctx.work():
            for L in Ls:
                worst = mpf(0)
                for n in ns:
                    scaled = abs(asym.residual(n, L, ctx)) * mpf(n) ** (
                        mpf(L) / 2 + mpf(5) / 4
                    ) * mpmath.exp(2 * mpmath.sqrt(mp.pi * n))
                    worst = max(worst, scaled)
                if not mpmath.isfinite(worst) or worst > 100:
                    return False, f"L={L}: scaled residual max {_nd(worst)}"
        return True, f"scaled residual finite and modest for L in {Ls}, n <= {top}"

    add("scaled-residual-bounded", scaled_residual_bounded)

    # -- quadrature oracles ----------------------------------------------------
    def mellin():
        ctx = precision.PrecisionContext(40)
        svals = (3,) if fast else (2, Q(5, 2), 3, 4)
        q = oracle.QuadratureConfig("1e-22", 12)
        for s in svals:
            lhs, rhs = oracle.mellin_check(s, ctx, q)
            if abs(lhs - rhs) > mpf("1e-22"):
                return False, f"s={s}: |lhs-rhs|={_nd(abs(lhs - rhs))}"
        return True, f"Mellin identity at s in {tuple(str(s) for s in svals)}"

    add("mellin-identity", mellin)

    def laplace_identity():
        ctx = precision.PrecisionContext(40)
        q = oracle.QuadratureConfig("1e-20", 12)
        grid = [(1, 1)] if fast else [(a, z) for a in (1, 2, 3) for z in (Q(1, 2), 1, 2)]
        for a, z in grid:
            lhs, rhs = oracle.k1_laplace_pair(a, z, ctx, q)
            if abs(lhs - rhs) > mpf("1e-20"):
                return False, f"alpha={a}, z={z}: |lhs-rhs|={_nd(abs(lhs - rhs))}"
        return True, f"Laplace-transform identity on {len(grid)} (alpha, z) pairs"

    add("laplace-identity", laplace_identity)

    def triangulation():
        ctx = precision.PrecisionContext(40)
        grid = [(5, 2), (10, 1)] if fast else [(n, x) for n in (2, 5, 10, 20) for x in (1, 2, 3)]
        q = oracle.QuadratureConfig("1e-12", 14)
        for n, x in grid:
            a = oracle.i_n_via_chf(n, x, ctx, q)
            b = oracle.i_n_via_bessel(n, x, ctx, q)
            if abs(a - b) > 2 * q.tolerance():
                return False, f"(n={n}, x={x}): |chf-bessel|={_nd(abs(a - b))}"
        return True, f"two-representation agreement on {len(grid)} grid points"

    add("representation-triangulation", triangulation)

    def quad_depth():
        ctx = precision.PrecisionContext(40)
        a = oracle.i_n_via_bessel(2, 1, ctx, oracle.QuadratureConfig("1e-10", 12))
        b = oracle.i_n_via_bessel(2, 1, ctx, oracle.QuadratureConfig("1e-10", 16))
        ok = abs(a - b) < mpf("1e-10")
        return ok, "deeper refinement cap shifts result below tolerance"

    add("quadrature-depth", quad_depth)

    def oracle_vs_exact():
        ns = (10, 20) if fast else (10, 20, 50)
        ctx = precision.PrecisionContext(120)
        q = oracle.QuadratureConfig(mpf(10) ** -40, 14)
        for n in ns:
            got = oracle.gn_oracle(n, 40, ctx, q)
            ref = oracle.gn_exact_minus_inv_n(n, ctx)
            if abs((got - ref) / ref) > mpf(10) ** -6:
                return False, f"n={n}: rel err {_nd(abs((got - ref) / ref))}"
        return True, f"divisor-sum oracle matches exact path for n in {ns}"

    add("oracle-vs-exact", oracle_vs_exact)

    return checks


def run_verify(fast: bool = False, out=print) -> bool:
    """Run the property suite; prints one PASS/FAIL line per property."""
    all_ok = True
    for name, fn in build_checks(fast):
        try:
            ok, detail = fn()
        except Exception as exc:  # a crashed check is a failed check
            ok, detail = False, f"exception: {exc!r}"
        all_ok = all_ok and ok
        out(f"{'PASS' if ok else 'FAIL'}  {name}: {detail}")
    return all_ok
