"""High-precision cotangent-sum reciprocity coefficients and asymptotics.

Public surface: exact Bernoulli/zeta/b_k arithmetic in Q[pi^2], the Taylor
coefficients g_n with loss-of-significance guards, the cotangent sum c(h/k)
and g at rationals, the exact asymptotic-expansion coefficients, numeric
evaluation of the truncated expansion and residuals, and independent
quadrature oracles (K-Bessel, Tricomi U, divisor-sum reconstruction).
"""

from .asym import (
    ExpansionResult,
    expansion_sum,
    figure_dataset,
    figure_digits,
    figure_quantity,
    l5_amplitude,
    predicted_l5_term,
    residual,
    residual_digits,
)
from .coeffs import CTilde, ZPolynomial, c_tilde, hankel, lambda_coeff, p_poly, p_poly_composition
from .cotangent import ReducedFraction, cotangent_sum, g_direct, reduce_fraction
from .errors import (
    AccuracyError,
    CacheFormatError,
    CotanasymError,
    DomainError,
    InsufficientPrecisionError,
    InvalidArgumentError,
)
from .exact import (
    PiPolynomial,
    Q,
    b_coeff,
    bernoulli,
    binomial,
    load_bernoulli_cache,
    save_bernoulli_cache,
    zeta_even,
)
from .gn import (
    GnValue,
    GuardReport,
    g_exact,
    g_numeric,
    g_taylor_eval,
    gn_value,
    guard_G1,
    guard_Ginf,
    guard_report,
    recommend_digits,
)
from .oracle import (
    QuadratureConfig,
    divisor_count,
    gn_exact_minus_inv_n,
    gn_oracle,
    i_n_via_bessel,
    i_n_via_chf,
    k1_laplace_pair,
    k_bessel_1,
    mellin_check,
    u_chf,
    u_tricomi,
)
from .precision import (
    BigComplex,
    BigReal,
    PrecisionContext,
    eval_pi_poly,
    gamma_real,
    make_context,
    pi_value,
)

__version__ = "0.1.0"
