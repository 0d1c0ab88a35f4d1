"""Pure-numpy kernels: vectorized fallback used when numba is unavailable.

Every function here has a signature-identical twin in _kernels_numba; the
two must stay semantically interchangeable. Summation kernels return
(re, im, abs_sum, tail_bound, terms_used, converged); the stopping rule is
the smallest m with |t_m| <= tol and geometric tail bound <= tol, where
the bound uses the monotone envelope of the term ratio from index m on.
"""

from __future__ import annotations

import numpy as np

JIT = False

_BLOCK = 4096


def zeta_cb_sum(z, s_re, s_im, tail_tol, max_terms):
    """Sum of (2z)^(2m) / (C(2m, m) m^s) over m >= 1."""
    s = complex(s_re, s_im)
    zz = z * z
    expo = -s_re if s_re < 0.0 else 0.0
    t_cur = complex(2.0 * zz, 0.0)
    total = t_cur
    abs_total = abs(t_cur)
    m = 1
    tail = np.inf
    while True:
        rho = zz * ((2.0 * m + 2.0) / (2.0 * m + 1.0)) * ((m + 1.0) / m) ** expo
        if rho < 1.0:
            tail = abs(t_cur) * rho / (1.0 - rho)
            if abs(t_cur) <= tail_tol and tail <= tail_tol:
                return total.real, total.imag, abs_total, tail, m, True
        if m >= max_terms:
            return total.real, total.imag, abs_total, tail, m, False
        nblk = min(_BLOCK, max_terms - m)
        mm = m + np.arange(1.0, nblk + 1.0)
        prev = mm - 1.0
        ratios = (
            4.0 * zz * mm * mm / ((2.0 * prev + 1.0) * (2.0 * prev + 2.0))
        ) * np.exp(s * (np.log(prev) - np.log(mm)))
        terms = t_cur * np.cumprod(ratios)
        abs_terms = np.abs(terms)
        rho_b = zz * ((2.0 * mm + 2.0) / (2.0 * mm + 1.0)) * ((mm + 1.0) / mm) ** expo
        with np.errstate(divide="ignore", invalid="ignore"):
            tails = np.where(rho_b < 1.0, abs_terms * rho_b / (1.0 - rho_b), np.inf)
        done = (abs_terms <= tail_tol) & (tails <= tail_tol)
        if done.any():
            idx = int(np.argmax(done))
            total += terms[: idx + 1].sum()
            abs_total += abs_terms[: idx + 1].sum()
            return total.real, total.imag, abs_total, float(tails[idx]), m + idx + 1, True
        total += terms.sum()
        abs_total += abs_terms.sum()
        t_cur = complex(terms[-1])
        m += nblk


def eta_cb_sum(z, s_re, s_im, tail_tol, max_terms):
    """Sum of (2z)^(2m+1) / (C(2m+1, m+1/2) (m+1/2)^s) over m >= 0.

    The m = 0 term is (pi z / 2) 2^s since C(1, 1/2) = 4 / pi.
    """
    s = complex(s_re, s_im)
    zz = z * z
    expo = -s_re if s_re < 0.0 else 0.0
    t_cur = 0.5 * np.pi * z * np.exp(s * np.log(2.0))
    total = t_cur
    abs_total = abs(t_cur)
    m = 0
    count = 1
    tail = np.inf
    while True:
        rho = (
            zz
            * ((2.0 * m + 3.0) / (2.0 * m + 2.0))
            * ((2.0 * m + 3.0) / (2.0 * m + 1.0)) ** expo
        )
        if rho < 1.0:
            tail = abs(t_cur) * rho / (1.0 - rho)
            if abs(t_cur) <= tail_tol and tail <= tail_tol:
                return total.real, total.imag, abs_total, tail, count, True
        if count >= max_terms:
            return total.real, total.imag, abs_total, tail, count, False
        nblk = min(_BLOCK, max_terms - count)
        mm = m + np.arange(1.0, nblk + 1.0)
        prev = mm - 1.0
        ratios = (
            zz * (2.0 * prev + 3.0) / (2.0 * prev + 2.0)
        ) * np.exp(s * (np.log(2.0 * prev + 1.0) - np.log(2.0 * prev + 3.0)))
        terms = t_cur * np.cumprod(ratios)
        abs_terms = np.abs(terms)
        rho_b = (
            zz
            * ((2.0 * mm + 3.0) / (2.0 * mm + 2.0))
            * ((2.0 * mm + 3.0) / (2.0 * mm + 1.0)) ** expo
        )
        with np.errstate(divide="ignore", invalid="ignore"):
            tails = np.where(rho_b < 1.0, abs_terms * rho_b / (1.0 - rho_b), np.inf)
        done = (abs_terms <= tail_tol) & (tails <= tail_tol)
        if done.any():
            idx = int(np.argmax(done))
            total += terms[: idx + 1].sum()
            abs_total += abs_terms[: idx + 1].sum()
            return (
                total.real,
                total.imag,
                abs_total,
                float(tails[idx]),
                count + idx + 1,
                True,
            )
        total += terms.sum()
        abs_total += abs_terms.sum()
        t_cur = complex(terms[-1])
        m += nblk
        count += nblk


def polylog_circle(k, sigma, n_terms):
    """Partial sum of Li_k(e^(i sigma)): returns (re, im, abs_sum)."""
    total = 0.0 + 0.0j
    abs_sum = 0.0
    start = 1
    while start <= n_terms:
        stop = min(start + _BLOCK, n_terms + 1)
        mm = np.arange(start, stop, dtype=np.float64)
        terms = np.exp(1j * sigma * mm) / mm**k
        total += terms.sum()
        abs_sum += float((mm**-float(k)).sum())
        start = stop
    return total.real, total.imag, abs_sum


def sin_over_m2_sum(x, n_terms):
    """Partial sum of sin(m x) / m^2 for m = 1..n_terms."""
    total = 0.0
    start = 1
    while start <= n_terms:
        stop = min(start + _BLOCK, n_terms + 1)
        mm = np.arange(start, stop, dtype=np.float64)
        total += float((np.sin(x * mm) / (mm * mm)).sum())
        start = stop
    return total


def mzv_partial(a, m_max):
    """Partial sum of H_(m-1) / m^a for m = 2..m_max (harmonic prefix)."""
    h = np.cumsum(1.0 / np.arange(1.0, m_max))
    mm = np.arange(2.0, m_max + 1.0)
    return float((h / mm**a).sum())


def zeta_pow_sum(k, m_max):
    """Partial sum of m^(-k), summed ascending by value for stable rounding."""
    mm = np.arange(float(m_max), 0.0, -1.0)
    return float((mm ** (-float(k))).sum())


def cb_logsine_vals(d_left, d_right, half, log_sin_half_sigma, cot_half, s_minus_2, kind):
    """Integrand family on (0, sigma) with L = -2 log(sin(theta/2) / sin(sigma/2)).

    kind 0: L^(s-2); kind 1: theta L^(s-2); kind 2: (theta - sigma) L^(s-2).
    Endpoint distances are taken from the quadrature map, so log terms are
    evaluated without cancellation at either end.
    """
    dl = d_left
    dr = d_right
    left = dl <= half
    with np.errstate(divide="ignore", invalid="ignore"):
        sin_l = np.sin(0.5 * np.where(left, dl, half))
        l_left = -2.0 * (np.log(sin_l) - log_sin_half_sigma)
        a = np.sin(0.25 * dr)
        arg = -2.0 * a * a - cot_half * np.sin(0.5 * dr)
        l_right = -2.0 * np.log1p(np.where(left, 0.0, arg))
        big_l = np.where(left, l_left, l_right)
        good = np.isfinite(big_l) & (big_l > 0.0) & (dl > 0.0) & (dr > 0.0)
        pw = np.where(good, big_l, 1.0) ** s_minus_2
    if kind == 1:
        pw = dl * pw
    elif kind == 2:
        pw = -dr * pw
    return np.where(good, pw, 0.0)


def poly_logsine_vals(d_near, y, c1, c2):
    """P1(y) P2(y) log(2 sin(d_near / 2)) with polynomials given ascending."""
    acc1 = np.zeros_like(y)
    for c in c1[::-1]:
        acc1 = acc1 * y + c
    acc2 = np.zeros_like(y)
    for c in c2[::-1]:
        acc2 = acc2 * y + c
    with np.errstate(divide="ignore", invalid="ignore"):
        val = np.log(2.0 * np.sin(0.5 * d_near)) * acc1 * acc2
    return np.where(np.isfinite(val), val, 0.0)


def theta_logsin_vals(theta):
    """theta log(sin(theta))."""
    with np.errstate(divide="ignore", invalid="ignore"):
        val = theta * np.log(np.sin(theta))
    return np.where(np.isfinite(val), val, 0.0)


def logsin_half_vals(theta):
    """log(sin(theta / 2))."""
    with np.errstate(divide="ignore", invalid="ignore"):
        val = np.log(np.sin(0.5 * theta))
    return np.where(np.isfinite(val), val, 0.0)
