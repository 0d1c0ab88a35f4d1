"""Numba-jitted kernels: twin of _kernels_numpy with identical signatures.

Loops are written scalar-style; numba compiles them to tight machine code.
cache=True persists the compilation artifacts next to the module so warmup
is paid once per environment.
"""

from __future__ import annotations

import cmath
import math

import numpy as np
from numba import njit

JIT = True


@njit(cache=True)
def zeta_cb_sum(z, s_re, s_im, tail_tol, max_terms):
    s = complex(s_re, s_im)
    zz = z * z
    expo = -s_re if s_re < 0.0 else 0.0
    t = complex(2.0 * zz, 0.0)
    total = t
    abs_total = abs(t)
    m = 1
    tail = np.inf
    while True:
        rho = zz * ((2.0 * m + 2.0) / (2.0 * m + 1.0)) * ((m + 1.0) / m) ** expo
        if rho < 1.0:
            tail = abs(t) * rho / (1.0 - rho)
            if abs(t) <= tail_tol and tail <= tail_tol:
                return total.real, total.imag, abs_total, tail, m, True
        if m >= max_terms:
            return total.real, total.imag, abs_total, tail, m, False
        ratio = 4.0 * zz * (m + 1.0) * (m + 1.0) / ((2.0 * m + 1.0) * (2.0 * m + 2.0))
        t = t * ratio * cmath.exp(s * (math.log(m) - math.log(m + 1.0)))
        total += t
        abs_total += abs(t)
        m += 1


@njit(cache=True)
def eta_cb_sum(z, s_re, s_im, tail_tol, max_terms):
    s = complex(s_re, s_im)
    zz = z * z
    expo = -s_re if s_re < 0.0 else 0.0
    t = 0.5 * np.pi * z * cmath.exp(s * math.log(2.0))
    total = t
    abs_total = abs(t)
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
            tail = abs(t) * rho / (1.0 - rho)
            if abs(t) <= tail_tol and tail <= tail_tol:
                return total.real, total.imag, abs_total, tail, count, True
        if count >= max_terms:
            return total.real, total.imag, abs_total, tail, count, False
        ratio = zz * (2.0 * m + 3.0) / (2.0 * m + 2.0)
        t = t * ratio * cmath.exp(s * (math.log(2.0 * m + 1.0) - math.log(2.0 * m + 3.0)))
        total += t
        abs_total += abs(t)
        m += 1
        count += 1


@njit(cache=True)
def polylog_circle(k, sigma, n_terms):
    total = complex(0.0, 0.0)
    abs_sum = 0.0
    kf = float(k)
    for m in range(1, n_terms + 1):
        w = float(m) ** (-kf)
        total += cmath.exp(complex(0.0, sigma * m)) * w
        abs_sum += w
    return total.real, total.imag, abs_sum


@njit(cache=True)
def sin_over_m2_sum(x, n_terms):
    total = 0.0
    for m in range(1, n_terms + 1):
        mf = float(m)
        total += math.sin(x * mf) / (mf * mf)
    return total


@njit(cache=True)
def mzv_partial(a, m_max):
    total = 0.0
    h = 0.0
    af = float(a)
    for m in range(2, m_max + 1):
        h += 1.0 / (m - 1.0)
        total += h / float(m) ** af
    return total


@njit(cache=True)
def zeta_pow_sum(k, m_max):
    total = 0.0
    kf = float(k)
    for m in range(m_max, 0, -1):
        total += float(m) ** (-kf)
    return total


@njit(cache=True)
def cb_logsine_vals(d_left, d_right, half, log_sin_half_sigma, cot_half, s_minus_2, kind):
    n = d_left.shape[0]
    out = np.empty(n, dtype=np.float64)
    for i in range(n):
        dl = d_left[i]
        dr = d_right[i]
        if dl <= 0.0 or dr <= 0.0:
            out[i] = 0.0
            continue
        if dl <= half:
            sin_l = math.sin(0.5 * dl)
            if sin_l <= 0.0:
                out[i] = 0.0
                continue
            big_l = -2.0 * (math.log(sin_l) - log_sin_half_sigma)
        else:
            a = math.sin(0.25 * dr)
            arg = -2.0 * a * a - cot_half * math.sin(0.5 * dr)
            if arg <= -1.0:
                out[i] = 0.0
                continue
            big_l = -2.0 * math.log1p(arg)
        if not math.isfinite(big_l) or big_l <= 0.0:
            out[i] = 0.0
            continue
        pw = big_l**s_minus_2
        if kind == 1:
            pw = dl * pw
        elif kind == 2:
            pw = -dr * pw
        out[i] = pw
    return out


@njit(cache=True)
def poly_logsine_vals(d_near, y, c1, c2):
    n = d_near.shape[0]
    out = np.empty(n, dtype=np.float64)
    for i in range(n):
        d = d_near[i]
        if d <= 0.0:
            out[i] = 0.0
            continue
        sn = 2.0 * math.sin(0.5 * d)
        if sn <= 0.0:
            out[i] = 0.0
            continue
        acc1 = 0.0
        for j in range(c1.shape[0] - 1, -1, -1):
            acc1 = acc1 * y[i] + c1[j]
        acc2 = 0.0
        for j in range(c2.shape[0] - 1, -1, -1):
            acc2 = acc2 * y[i] + c2[j]
        out[i] = math.log(sn) * acc1 * acc2
    return out


@njit(cache=True)
def theta_logsin_vals(theta):
    n = theta.shape[0]
    out = np.empty(n, dtype=np.float64)
    for i in range(n):
        t = theta[i]
        sn = math.sin(t)
        if t <= 0.0 or sn <= 0.0:
            out[i] = 0.0
            continue
        out[i] = t * math.log(sn)
    return out


@njit(cache=True)
def logsin_half_vals(theta):
    n = theta.shape[0]
    out = np.empty(n, dtype=np.float64)
    for i in range(n):
        sn = math.sin(0.5 * theta[i])
        if theta[i] <= 0.0 or sn <= 0.0:
            out[i] = 0.0
            continue
        out[i] = math.log(sn)
    return out
