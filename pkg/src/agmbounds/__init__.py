"""agmbounds: AGM, elliptic integrals, bivariate means, and the machinery
that verifies the sharp bounds L(a,b) < M(a,b) < (pi/2) L(a,b).

The floating kernels run on a compiled extension when available and on a
pure-Python twin otherwise; agmbounds.backend.BACKEND names the active one.
"""

from agmbounds.backend import BACKEND, available_backends
from agmbounds.coefficients import (
    CoefficientTable,
    a_coeff_closed,
    a_coeff_sum,
    b_coeff,
    build_table,
    central_binomial,
    double_factorial,
    g_closed,
    g_sum,
    h_closed,
    h_sum,
    odd_harmonic,
    s_seq,
    wallis_integral,
    wallis_ratio,
    zeilberger_check,
)
from agmbounds.elliptic import (
    EllipticResult,
    Modulus,
    ModulusTooLarge,
    TermBudgetExhausted,
    k_agm,
    k_quadrature,
    k_series,
    m_from_k,
)
from agmbounds.means import (
    AgmTrace,
    MeanInput,
    agm,
    gen_log_mean,
    identric_mean,
    log_mean,
)
from agmbounds.verify import (
    RatioScan,
    VerificationReport,
    check_coefficient_identities,
    check_coefficient_monotonicity,
    check_double_inequality,
    check_mean_order,
    check_ratio_scan,
    check_reciprocal,
    check_series_ratio_inequality,
    check_sharpness,
    check_sign_change,
    check_k_consistency,
    run_all,
    scan_ratio,
)

__version__ = "0.1.0"

__all__ = [
    "BACKEND",
    "available_backends",
    "AgmTrace",
    "MeanInput",
    "agm",
    "gen_log_mean",
    "identric_mean",
    "log_mean",
    "EllipticResult",
    "Modulus",
    "ModulusTooLarge",
    "TermBudgetExhausted",
    "k_agm",
    "k_quadrature",
    "k_series",
    "m_from_k",
    "CoefficientTable",
    "a_coeff_closed",
    "a_coeff_sum",
    "b_coeff",
    "build_table",
    "central_binomial",
    "double_factorial",
    "g_closed",
    "g_sum",
    "h_closed",
    "h_sum",
    "odd_harmonic",
    "s_seq",
    "wallis_integral",
    "wallis_ratio",
    "zeilberger_check",
    "RatioScan",
    "VerificationReport",
    "check_coefficient_identities",
    "check_coefficient_monotonicity",
    "check_double_inequality",
    "check_mean_order",
    "check_ratio_scan",
    "check_reciprocal",
    "check_series_ratio_inequality",
    "check_sharpness",
    "check_sign_change",
    "check_k_consistency",
    "run_all",
    "scan_ratio",
    "__version__",
]
