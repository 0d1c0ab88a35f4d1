"""Floating-point series engine for the central binomial family.

All summation loops live in the kernel backends; this module owns domain
checks, stopping-parameter selection, and error accounting. Results carry
an abs_err field combining the proven geometric (or Euler-Maclaurin) tail
bound with a first-order rounding model, so downstream comparisons can be
judged against an explicit budget instead of a vibe.
"""

from __future__ import annotations

import math
import os
import sys
from dataclasses import dataclass

from .backends import get_kernels
from .errors import BudgetExceededError, DomainError

EPS = sys.float_info.epsilon

EULER_GAMMA = 0.5772156649015329

ENV_MAX_TERMS = "LOGSINE_MAX_TERMS"


@dataclass(frozen=True)
class SeriesConfig:
    """Budget and tolerance knobs for the series engine.

    z_cap guards against the slow near-unit regime where the term ratio
    approaches 1; callers that accept the cost may raise it toward 1.
    """

    max_terms: int = 200000
    tail_tolerance: float = 1e-14
    z_cap: float = 0.95

    def __post_init__(self):
        if self.max_terms < 1:
            raise DomainError(f"max_terms must be >= 1, got {self.max_terms}")
        if not self.tail_tolerance > 0.0:
            raise DomainError(f"tail_tolerance must be > 0, got {self.tail_tolerance}")
        if not 0.0 < self.z_cap < 1.0:
            raise DomainError(f"z_cap must lie in (0, 1), got {self.z_cap}")

    @classmethod
    def default(cls) -> "SeriesConfig":
        """Defaults, with max_terms overridable via LOGSINE_MAX_TERMS."""
        env = os.environ.get(ENV_MAX_TERMS, "").strip()
        if env:
            return cls(max_terms=int(env))
        return cls()


@dataclass(frozen=True)
class ComplexValue:
    """A complex result with an absolute error estimate and term count."""

    re: float
    im: float
    abs_err: float
    terms: int = 0

    def __complex__(self) -> complex:
        return complex(self.re, self.im)

    def __abs__(self) -> float:
        return math.hypot(self.re, self.im)


def _coerce_s(s) -> complex:
    if isinstance(s, ComplexValue):
        return complex(s)
    return complex(s)


def _sum_op(kernel, z: float, s: complex, config: SeriesConfig, name: str) -> ComplexValue:
    re, im, abs_sum, tail, terms, converged = kernel(
        float(z), s.real, s.imag, config.tail_tolerance, config.max_terms
    )
    abs_err = tail + 4.0 * EPS * (abs_sum + math.hypot(re, im))
    value = ComplexValue(re=re, im=im, abs_err=abs_err, terms=terms)
    if not converged:
        raise BudgetExceededError(
            f"{name}: {terms} terms reached tail bound {tail:.3e} "
            f"> tolerance {config.tail_tolerance:.3e}",
            partial=value,
        )
    return value


def zeta_cb_series(s, z: float, config: SeriesConfig | None = None) -> ComplexValue:
    """Central binomial zeta: sum of (2z)^(2m) / (C(2m, m) m^s), m >= 1.

    Terms are generated by the exact ratio recurrence
    t_(m+1)/t_m = 4 z^2 (m+1)^2 / ((2m+1)(2m+2)) (m/(m+1))^s, t_1 = 2 z^2,
    and the stop rule uses the monotone envelope of |ratio| from the
    current index on, so the reported tail is a true geometric bound.
    """
    config = config or SeriesConfig.default()
    s = _coerce_s(s)
    z = float(z)
    if not 0.0 < z <= config.z_cap:
        raise DomainError(
            f"z must lie in (0, {config.z_cap}] (raise z_cap to go closer to 1), got {z}"
        )
    return _sum_op(get_kernels().zeta_cb_sum, z, s, config, "zeta_cb_series")


def eta_cb_series(s, z: float, config: SeriesConfig | None = None) -> ComplexValue:
    """Half-shifted central binomial series: (2z)^(2m+1) / (C(2m+1, m+1/2) (m+1/2)^s).

    C(2m+1, m+1/2) = Gamma(2m+2) / Gamma(m+3/2)^2, so the m = 0 term is
    (pi z / 2) 2^s and successive ratios are
    z^2 (2m+3)/(2m+2) ((2m+1)/(2m+3))^s.
    """
    config = config or SeriesConfig.default()
    s = _coerce_s(s)
    z = float(z)
    if not 0.0 < z <= config.z_cap:
        raise DomainError(
            f"z must lie in (0, {config.z_cap}] (raise z_cap to go closer to 1), got {z}"
        )
    return _sum_op(get_kernels().eta_cb_sum, z, s, config, "eta_cb_series")


def sls_continued(s, sigma: float, config: SeriesConfig | None = None) -> ComplexValue:
    """Shifted log-sine integral via its entire continuation.

    SLs(s; sigma) = zeta_cb(s; sin(sigma/2)) - (sigma/pi) eta_cb(s; sin(sigma/2)),
    valid for every complex s and 0 < sigma < pi. At s = 1 the two pieces
    cancel exactly; the returned abs_err is the honest budget for that 0.
    """
    config = config or SeriesConfig.default()
    s = _coerce_s(s)
    sigma = float(sigma)
    if not 0.0 < sigma < math.pi:
        raise DomainError(f"sigma must lie in (0, pi), got {sigma}")
    z = math.sin(0.5 * sigma)
    zeta_val = zeta_cb_series(s, z, config)
    eta_val = eta_cb_series(s, z, config)
    w = sigma / math.pi
    re = zeta_val.re - w * eta_val.re
    im = zeta_val.im - w * eta_val.im
    abs_err = zeta_val.abs_err + w * eta_val.abs_err + 2.0 * EPS * (abs(zeta_val) + w * abs(eta_val))
    return ComplexValue(re=re, im=im, abs_err=abs_err, terms=zeta_val.terms + eta_val.terms)


def polylog_unit_circle(k: int, sigma: float, config: SeriesConfig | None = None) -> ComplexValue:
    """Li_k(e^(i sigma)) for integer k >= 2 by direct partial summation.

    The term count targets tail_tolerance using the better of the integral
    bound M^(1-k)/(k-1) and the Dirichlet-kernel bound (M+1)^(-k)/sin(sigma/2),
    but is capped at max_terms; the cap is reported through abs_err rather
    than raised, since the partial sum is still a usable value.
    """
    config = config or SeriesConfig.default()
    k = int(k)
    if k < 2:
        raise DomainError(f"polylog order must be an integer >= 2, got {k}")
    sigma = float(sigma)
    if not 0.0 < sigma < 2.0 * math.pi:
        raise DomainError(f"sigma must lie in (0, 2 pi), got {sigma}")
    sin_half = math.sin(0.5 * sigma)
    tol = config.tail_tolerance
    m_integral = (tol * (k - 1)) ** (-1.0 / (k - 1))
    m_dirichlet = (tol * sin_half) ** (-1.0 / k) if sin_half > 0.0 else math.inf
    m_needed = min(m_integral, m_dirichlet)
    if m_needed > 1e18:
        m_terms = config.max_terms
    else:
        m_terms = min(config.max_terms, max(10, int(math.ceil(m_needed))))
    re, im, abs_sum = get_kernels().polylog_circle(k, sigma, m_terms)
    bound_integral = m_terms ** (1.0 - k) / (k - 1.0)
    bound_dirichlet = (
        (m_terms + 1.0) ** (-float(k)) / sin_half if sin_half > 0.0 else math.inf
    )
    tail = min(bound_integral, bound_dirichlet)
    rounding = EPS * (4.0 * abs_sum + 4.0 * sigma * (math.log(m_terms) + 1.0))
    return ComplexValue(re=re, im=im, abs_err=tail + rounding, terms=m_terms)


def riemann_zeta(k: int, config: SeriesConfig | None = None) -> ComplexValue:
    """zeta(k) for integer k >= 2: direct sum plus Euler-Maclaurin tail."""
    config = config or SeriesConfig.default()
    k = int(k)
    if k < 2:
        raise DomainError(f"zeta argument must be an integer >= 2, got {k}")
    m = min(10000, config.max_terms)
    partial = get_kernels().zeta_pow_sum(k, m)
    mf = float(m)
    tail = (
        mf ** (1.0 - k) / (k - 1.0)
        - 0.5 * mf ** (-float(k))
        + (k / 12.0) * mf ** (-float(k) - 1.0)
    )
    value = partial + tail
    trunc = (k * (k + 1) * (k + 2) / 720.0) * mf ** (-float(k) - 3.0)
    abs_err = trunc + EPS * mf * value
    return ComplexValue(re=value, im=0.0, abs_err=abs_err, terms=m)


def zeta3(config: SeriesConfig | None = None) -> ComplexValue:
    """zeta(3), the Apery constant."""
    return riemann_zeta(3, config)


def mzv_1_2n(n: int, config: SeriesConfig | None = None) -> ComplexValue:
    """Double zeta value zeta(1, 2n) = sum over 0 < m1 < m2 of 1/(m1 m2^(2n)).

    The inner sum telescopes to H_(m-1)/m^(2n); the partial sum over
    m <= M is corrected with an Euler-Maclaurin tail driven by the
    asymptotic H_(m-1) = log m + gamma - 1/(2m) - 1/(12 m^2) + O(m^-4).
    A naive truncation could not reach 1e-8 within any sane budget for
    n = 1, so the corrected tail is part of the contract here.
    """
    config = config or SeriesConfig.default()
    n = int(n)
    if n < 1:
        raise DomainError(f"mzv_1_2n requires n >= 1, got {n}")
    a = 2 * n
    m = min(100000, config.max_terms)
    if m < 10:
        raise BudgetExceededError(
            f"mzv_1_2n needs at least 10 terms for its tail correction, got {m}",
            partial=None,
        )
    partial = get_kernels().mzv_partial(a, m)
    mf = float(m)
    lg = math.log(mf) + EULER_GAMMA
    af = float(a)
    # T1: Euler-Maclaurin for f(x) = (log x + gamma) x^-a
    t1 = (
        mf ** (1.0 - af) * (lg / (af - 1.0) + 1.0 / (af - 1.0) ** 2)
        - 0.5 * lg * mf**-af
        - (1.0 - af * lg) * mf ** (-af - 1.0) / 12.0
    )
    # T2, T3: tails of -(1/2) m^-(a+1) and -(1/12) m^-(a+2)
    t2 = -0.5 * (
        mf**-af / af - 0.5 * mf ** (-af - 1.0) + (af + 1.0) / 12.0 * mf ** (-af - 2.0)
    )
    t3 = -(1.0 / 12.0) * (mf ** (-af - 1.0) / (af + 1.0) - 0.5 * mf ** (-af - 2.0))
    value = partial + t1 + t2 + t3
    resid = (af**3 * (math.log(mf) + 2.0)) * mf ** (-af - 3.0) + mf ** (-af - 3.0) / (
        120.0 * (af + 3.0)
    )
    abs_err = resid + EPS * mf * value
    return ComplexValue(re=value, im=0.0, abs_err=abs_err, terms=m)
