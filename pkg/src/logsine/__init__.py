"""Dual-engine library for poly-Bernoulli numbers, Lehmer's polynomial
pairs, central binomial series, and the shifted log-sine integral.

The exact engine works in rational arithmetic (series expansions, closed
forms, polynomial recurrences); the floating-point engine evaluates the
same objects by convergent series and tanh-sinh quadrature, with numba or
numpy kernels selected via LOGSINE_BACKEND. The verification module
cross-checks the two engines against each other on every identity the
library encodes.
"""

from .backends import backend_name, get_kernels
from .errors import (
    BudgetExceededError,
    CompositionError,
    DivisionError,
    DomainError,
    LogsineError,
    NumericalError,
    ValuationError,
)
from .exact import (
    IntPolynomial,
    Rational,
    RationalPolynomial,
    TruncatedSeries,
    parse_rational,
    rational_str,
    series_compose,
    series_divide,
    series_exp_em1,
    series_multiply,
    series_polylog,
)
from .lehmer import (
    ClosedFormValue,
    LehmerPair,
    eta_cb_closed,
    eta_generating_check,
    lehmer_pair,
    sls_closed,
    zeta_cb_closed,
)
from .polybernoulli import (
    PolyBernoulliTable,
    antidiagonal_sum,
    bernoulli_polynomial,
    classical_bernoulli,
    poly_bernoulli,
)
from .quadrature import (
    IntegralResult,
    QuadConfig,
    clausen_identity_check,
    ecb_integral,
    euler_identity_check,
    sls_integral,
    yujobo_identity_check,
    zcb_integral,
)
from .report import EvalReport
from .series import (
    ComplexValue,
    SeriesConfig,
    eta_cb_series,
    mzv_1_2n,
    polylog_unit_circle,
    riemann_zeta,
    sls_continued,
    zeta3,
    zeta_cb_series,
)
from .verification import run_full_suite

__version__ = "0.1.0"

__all__ = [
    "BudgetExceededError",
    "ClosedFormValue",
    "ComplexValue",
    "CompositionError",
    "DivisionError",
    "DomainError",
    "EvalReport",
    "IntPolynomial",
    "IntegralResult",
    "LehmerPair",
    "LogsineError",
    "NumericalError",
    "PolyBernoulliTable",
    "QuadConfig",
    "Rational",
    "RationalPolynomial",
    "SeriesConfig",
    "TruncatedSeries",
    "ValuationError",
    "antidiagonal_sum",
    "backend_name",
    "bernoulli_polynomial",
    "classical_bernoulli",
    "clausen_identity_check",
    "ecb_integral",
    "eta_cb_closed",
    "eta_cb_series",
    "eta_generating_check",
    "euler_identity_check",
    "get_kernels",
    "lehmer_pair",
    "mzv_1_2n",
    "parse_rational",
    "poly_bernoulli",
    "polylog_unit_circle",
    "rational_str",
    "riemann_zeta",
    "run_full_suite",
    "series_compose",
    "series_divide",
    "series_exp_em1",
    "series_multiply",
    "series_polylog",
    "sls_closed",
    "sls_continued",
    "sls_integral",
    "yujobo_identity_check",
    "zcb_integral",
    "zeta3",
    "zeta_cb_closed",
    "zeta_cb_series",
]
