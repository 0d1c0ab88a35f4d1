"""Identity verification suites tying the exact and floating-point engines together.

Each verify_* function checks one family of identities and returns
EvalReports; run_full_suite runs them in dependency order (exact rational
checks first, then series-engine checks, then quadrature cross-checks).
Identity ids are stable strings so downstream tooling can diff runs.
"""

from __future__ import annotations

import math
import time
from dataclasses import replace
from fractions import Fraction

from .exact import rational_str
from .lehmer import (
    eta_cb_closed,
    eta_generating_check,
    lehmer_pair,
    sls_closed,
    zeta_cb_closed,
)
from .polybernoulli import PolyBernoulliTable, antidiagonal_sum
from .quadrature import (
    QuadConfig,
    clausen_identity_check,
    ecb_integral,
    euler_identity_check,
    sls_integral,
    yujobo_identity_check,
    zcb_integral,
)
from .report import EvalReport, exact_report, numeric_report
from .series import (
    SeriesConfig,
    eta_cb_series,
    mzv_1_2n,
    polylog_unit_circle,
    sls_continued,
    zeta3,
    zeta_cb_series,
)

Fr = Fraction

# sigma = pi/3 makes sin^2(sigma/2) = 1/4, the anti-diagonal evaluation point
X_THIRD = Fr(1, 4)

PUBLISHED_P_LIST = {
    -1: (),
    0: (1,),
    1: (3,),
    2: (7, 8),
    3: (15, 70, 20),
}


def _ms(t0: float) -> int:
    return int((time.perf_counter() - t0) * 1000)


def verify_main_theorem_exact(
    n_max: int = 30, table: PolyBernoulliTable | None = None
) -> list[EvalReport]:
    """sls(-n; pi/3) = (1/3) sum_k B_(n-k)^(-k), exactly, for 0 <= n <= n_max."""
    if table is None:
        table = PolyBernoulliTable.build(n_max, -n_max, 0)
    reports = []
    for n in range(n_max + 1):
        t0 = time.perf_counter()
        lhs = sls_closed(n, X_THIRD)
        rhs = Fr(1, 3) * antidiagonal_sum(n, table)
        reports.append(exact_report(f"main-theorem-exact[n={n}]", lhs, rhs, _ms(t0)))
    return reports


def verify_lehmer_polynomial_list() -> EvalReport:
    """The first Lehmer p_n match the published list (ascending coefficients)."""
    t0 = time.perf_counter()
    computed = {n: lehmer_pair(n).p.coeffs for n in range(-1, 4)}
    return exact_report("lehmer-polynomial-list", computed, PUBLISHED_P_LIST, _ms(t0))


def verify_closed_form_elimination(
    n_max: int = 30, x_grid: tuple = (Fr(1, 4), Fr(1, 2), Fr(3, 4))
) -> list[EvalReport]:
    """The arcsin parts of zeta_cb and (sigma/pi) eta_cb cancel exactly at s = -n.

    Checks, per n and rational x: zeta_cb's rational part equals the sls
    closed form, its arcsin coefficient is exactly twice eta_cb's pi
    coefficient, and eta_cb is purely a pi multiple.
    """
    reports = []
    for n in range(n_max + 1):
        t0 = time.perf_counter()
        lhs_parts = []
        rhs_parts = []
        for x in x_grid:
            zeta_cf = zeta_cb_closed(n, z_sq=x)
            eta_cf = eta_cb_closed(n, z_sq=x)
            lhs_parts.append(
                (zeta_cf.rational_part, zeta_cf.arcsin_coeff, eta_cf.rational_part)
            )
            rhs_parts.append((sls_closed(n, x), 2 * eta_cf.pi_coeff, Fr(0)))
        reports.append(
            exact_report(
                f"closed-form-elimination[n={n}]", lhs_parts, rhs_parts, _ms(t0)
            )
        )
    return reports


def verify_eta_generating(
    z_grid: tuple = (Fr(1, 2), Fr(9, 10)), order: int = 6
) -> list[EvalReport]:
    """Taylor coefficients of the eta_cb generating function, exactly."""
    reports = []
    for z in z_grid:
        reports.extend(eta_generating_check(z, order))
    return reports


def verify_lehmer_closed_forms(
    n_max: int = 6,
    z_grid: tuple = (0.3, 0.5, 0.7),
    tol: float = 1e-9,
    config: SeriesConfig | None = None,
) -> list[EvalReport]:
    """Series engine at s = -n against the closed forms, absolute tolerance."""
    reports = []
    for n in range(n_max + 1):
        for z in z_grid:
            t0 = time.perf_counter()
            lhs = zeta_cb_series(-n, z, config).re
            rhs = zeta_cb_closed(n, z).to_float()
            reports.append(
                numeric_report(f"lehmer-zeta[n={n}][z={z!r}]", lhs, rhs, tol, _ms(t0))
            )
            t0 = time.perf_counter()
            lhs = eta_cb_series(-n, z, config).re
            rhs = eta_cb_closed(n, z).to_float()
            reports.append(
                numeric_report(f"lehmer-eta[n={n}][z={z!r}]", lhs, rhs, tol, _ms(t0))
            )
    return reports


def verify_main_theorem_general(
    n_max: int = 8,
    x_grid: tuple = (Fr(1, 4), Fr(1, 2), Fr(3, 4)),
    config: SeriesConfig | None = None,
) -> list[EvalReport]:
    """sls_continued(-n, sigma) against x p_n(x) / (2^n (1-x)^(n+1)).

    Each rational x in (0, 0.9] fixes sigma = 2 arcsin(sqrt(x)); the series
    value must land within its own reported abs_err plus a 1e-10 floor of
    the closed form, which scales naturally as the values grow with n.
    """
    config = config or SeriesConfig.default()
    reports = []
    for n in range(n_max + 1):
        for x in x_grid:
            if not 0 < x <= Fr(9, 10):
                raise ValueError(f"x_grid entries must lie in (0, 9/10], got {x}")
            t0 = time.perf_counter()
            sigma = 2.0 * math.asin(math.sqrt(x))
            value = sls_continued(-n, sigma, config)
            rhs = float(sls_closed(n, x))
            reports.append(
                numeric_report(
                    f"main-theorem-general[n={n}][x={rational_str(x)}]",
                    value.re,
                    rhs,
                    value.abs_err + 1e-10,
                    _ms(t0),
                )
            )
    return reports


def verify_sls_at_one(
    sigma_grid: tuple = (math.pi / 6, math.pi / 3, math.pi / 2, 2.0, 3.0),
    config: SeriesConfig | None = None,
) -> list[EvalReport]:
    """SLs(1; sigma) = 0: the zeta_cb and eta_cb pieces cancel within budget."""
    # sigma = 3.0 needs z = sin(1.5) above the default cap
    config = replace(config or SeriesConfig.default(), z_cap=0.9995)
    reports = []
    for sigma in sigma_grid:
        t0 = time.perf_counter()
        value = sls_continued(1.0, sigma, config)
        reports.append(
            numeric_report(
                f"sls-at-one[sigma={sigma!r}]", abs(value), 0.0, value.abs_err, _ms(t0)
            )
        )
    return reports


def verify_mzv_reduction(config: SeriesConfig | None = None) -> EvalReport:
    """Euler's reduction zeta(1, 2) = zeta(3)."""
    t0 = time.perf_counter()
    lhs = mzv_1_2n(1, config).re
    rhs = zeta3(config).re
    return numeric_report("mzv-euler-reduction", lhs, rhs, 1e-10, _ms(t0))


def _umezawa_s2(sigma: float) -> float:
    return -0.5 * sigma * sigma


def _umezawa_s3(sigma: float, config: SeriesConfig | None) -> float:
    li3 = polylog_unit_circle(3, sigma, config)
    z3 = zeta3(config)
    return -2.0 * (
        z3.re - li3.re + 0.5 * sigma * sigma * math.log(2.0 * math.sin(0.5 * sigma))
    )


def verify_umezawa_series(
    config: SeriesConfig | None = None,
    tol_s2: float = 1e-9,
    tol_s3: float = 1e-7,
) -> list[EvalReport]:
    """sls_continued against Umezawa's closed evaluations at s = 2 and s = 3.

    sigma = 3.0 puts sin(sigma/2) above the default z_cap, so this check
    runs with the cap raised; the extra term cost stays in the thousands.
    """
    config = replace(config or SeriesConfig.default(), z_cap=0.9995)
    reports = []
    for sigma in (0.1, 1.2, math.pi / 2, 3.0):
        t0 = time.perf_counter()
        lhs = sls_continued(2.0, sigma, config).re
        reports.append(
            numeric_report(
                f"umezawa-s2-series[sigma={sigma!r}]",
                lhs,
                _umezawa_s2(sigma),
                tol_s2,
                _ms(t0),
            )
        )
    for sigma in (math.pi / 3, math.pi / 2):
        t0 = time.perf_counter()
        lhs = sls_continued(3.0, sigma, config).re
        reports.append(
            numeric_report(
                f"umezawa-s3-series[sigma={sigma!r}]",
                lhs,
                _umezawa_s3(sigma, config),
                tol_s3,
                _ms(t0),
            )
        )
    return reports


def verify_umezawa_quadrature(
    quad_config: QuadConfig | None = None,
    series_config: SeriesConfig | None = None,
    tol_s2: float = 1e-9,
    tol_s3: float = 1e-7,
) -> list[EvalReport]:
    """sls_integral against Umezawa's closed evaluations at s = 2 and s = 3."""
    reports = []
    for sigma in (0.1, 1.2, math.pi / 2, 3.0):
        t0 = time.perf_counter()
        lhs = sls_integral(2.0, sigma, quad_config).value
        reports.append(
            numeric_report(
                f"umezawa-s2-quad[sigma={sigma!r}]",
                lhs,
                _umezawa_s2(sigma),
                tol_s2,
                _ms(t0),
            )
        )
    for sigma in (math.pi / 3, math.pi / 2):
        t0 = time.perf_counter()
        lhs = sls_integral(3.0, sigma, quad_config).value
        reports.append(
            numeric_report(
                f"umezawa-s3-quad[sigma={sigma!r}]",
                lhs,
                _umezawa_s3(sigma, series_config),
                tol_s3,
                _ms(t0),
            )
        )
    return reports


def verify_series_vs_integral(
    s_grid: tuple = (2.0, 2.5, 3.0, 4.0),
    sigma_grid: tuple = (math.pi / 6, math.pi / 3, math.pi / 2),
    tol: float = 1e-7,
    quad_config: QuadConfig | None = None,
    series_config: SeriesConfig | None = None,
) -> list[EvalReport]:
    """Integral representations against the series engine on a (s, sigma) grid.

    Covers all three operators: sls, the theta-weighted zeta_cb lemma and
    the unweighted (pi-prefactor) eta_cb lemma.
    """
    reports = []
    for s in s_grid:
        for sigma in sigma_grid:
            z = math.sin(0.5 * sigma)
            t0 = time.perf_counter()
            lhs = sls_integral(s, sigma, quad_config).value
            rhs = sls_continued(s, sigma, series_config).re
            reports.append(
                numeric_report(
                    f"sls-ac[s={s!r}][sigma={sigma!r}]", lhs, rhs, tol, _ms(t0)
                )
            )
            t0 = time.perf_counter()
            lhs = zcb_integral(s, sigma, quad_config).value
            rhs = zeta_cb_series(s, z, series_config).re
            reports.append(
                numeric_report(
                    f"zcb-lemma[s={s!r}][sigma={sigma!r}]", lhs, rhs, tol, _ms(t0)
                )
            )
            t0 = time.perf_counter()
            lhs = ecb_integral(s, sigma, quad_config).value
            rhs = eta_cb_series(s, z, series_config).re
            reports.append(
                numeric_report(
                    f"ecb-lemma[s={s!r}][sigma={sigma!r}]", lhs, rhs, tol, _ms(t0)
                )
            )
    return reports


def verify_integrand_linearity(
    s_grid: tuple = (2.0, 2.5, 3.0),
    sigma_grid: tuple = (0.5, math.pi / 3, math.pi / 2, 3.0),
    tol: float = 1e-9,
    quad_config: QuadConfig | None = None,
) -> list[EvalReport]:
    """sls_integral = zcb_integral - (sigma/pi) ecb_integral, each quadrature run
    independently."""
    reports = []
    for s in s_grid:
        for sigma in sigma_grid:
            t0 = time.perf_counter()
            lhs = sls_integral(s, sigma, quad_config).value
            rhs = (
                zcb_integral(s, sigma, quad_config).value
                - sigma / math.pi * ecb_integral(s, sigma, quad_config).value
            )
            reports.append(
                numeric_report(
                    f"quad-linearity[s={s!r}][sigma={sigma!r}]", lhs, rhs, tol, _ms(t0)
                )
            )
    return reports


def verify_classical_log_sine(
    quad_config: QuadConfig | None = None,
    series_config: SeriesConfig | None = None,
) -> list[EvalReport]:
    """Euler's zeta(3) identity, Clausen's identity, and both Yujobo forms."""
    reports = [euler_identity_check(quad_config, series_config)]
    for x in (1.0, math.pi / 2, math.pi):
        reports.append(clausen_identity_check(x, quad_config, series_config))
    reports.append(yujobo_identity_check(1, "odd-zeta", quad_config, series_config))
    reports.append(yujobo_identity_check(1, "mzv", quad_config, series_config))
    reports.append(yujobo_identity_check(2, "odd-zeta", quad_config, series_config))
    return reports


def run_full_suite(
    suites: tuple = ("exact", "series", "quad"),
    n_max_exact: int = 30,
    n_max_general: int = 8,
    series_config: SeriesConfig | None = None,
    quad_config: QuadConfig | None = None,
    progress=None,
) -> list[EvalReport]:
    """Run the selected suites in order and return every report.

    ``progress`` is called with each report as it is produced, letting the
    CLI stream status lines while the JSON document is assembled at the end.
    """
    reports: list[EvalReport] = []

    def add(items):
        if isinstance(items, EvalReport):
            items = [items]
        for item in items:
            reports.append(item)
            if progress is not None:
                progress(item)

    if "exact" in suites:
        add(verify_main_theorem_exact(n_max_exact))
        add(verify_lehmer_polynomial_list())
        add(verify_closed_form_elimination(n_max_exact))
        add(verify_eta_generating())
    if "series" in suites:
        add(verify_lehmer_closed_forms(config=series_config))
        add(verify_main_theorem_general(n_max_general, config=series_config))
        add(verify_sls_at_one(config=series_config))
        add(verify_mzv_reduction(series_config))
        add(verify_umezawa_series(series_config))
    if "quad" in suites:
        add(verify_umezawa_quadrature(quad_config, series_config))
        add(verify_series_vs_integral(quad_config=quad_config, series_config=series_config))
        add(verify_integrand_linearity(quad_config=quad_config))
        add(verify_classical_log_sine(quad_config, series_config))
    return reports
