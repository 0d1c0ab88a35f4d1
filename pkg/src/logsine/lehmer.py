"""Lehmer's polynomial pairs and the closed forms they generate.

The pair (p_n, q_n) satisfies, starting from p_{-1} = 0, q_{-1} = 1:

    p_{n+1} = 2(nx + 1) p_n + 2x(1 - x) p_n' + q_n
    q_{n+1} = (2(n + 1)x + 1) q_n + 2x(1 - x) q_n'

Closed forms at negative integer arguments (x = z^2 throughout):

    zeta_cb(-n; z) = x p_n(x) / (2^n (1-x)^(n+1))
                     + z sqrt(1-x) arcsin(z) q_n(x) / (2^n (1-x)^(n+2))
    eta_cb(-n; z)  = pi z sqrt(1-x) q_n(x) / (2^(n+1) (1-x)^(n+2))
    sls(-n; sigma) = x p_n(x) / (2^n (1-x)^(n+1)),  x = sin^2(sigma/2)

so the arcsin coefficient of zeta_cb is exactly twice the pi coefficient
of eta_cb, which is what makes the shifted log-sine combination rational.
"""

from __future__ import annotations

import threading
import time
import warnings
from dataclasses import dataclass
from fractions import Fraction
from math import asin, comb, factorial, pi, sqrt

from .errors import DomainError
from .exact import IntPolynomial, rational_str
from .report import EvalReport, exact_report

Fr = Fraction

_TWO_X_ONE_MINUS_X = IntPolynomial((0, 2, -2))


@dataclass(frozen=True)
class LehmerPair:
    n: int
    p: IntPolynomial
    q: IntPolynomial


_pairs: list[LehmerPair] = [LehmerPair(-1, IntPolynomial(), IntPolynomial((1,)))]
_pairs_lock = threading.Lock()


def _check_pair(pair: LehmerPair) -> None:
    # empirical invariants; a violation signals a broken recurrence, not bad input
    n, p, q = pair.n, pair.p, pair.q
    if n < 0:
        return
    if any(c < 0 for c in p.coeffs) or any(c < 0 for c in q.coeffs):
        warnings.warn(f"negative coefficient in Lehmer pair n={n}", RuntimeWarning)
    if n >= 1 and p.degree != n - 1:
        warnings.warn(f"deg p_{n} = {p.degree}, expected {n - 1}", RuntimeWarning)
    if q.degree != n:
        warnings.warn(f"deg q_{n} = {q.degree}, expected {n}", RuntimeWarning)


def lehmer_pair(n: int) -> LehmerPair:
    """Memoized (p_n, q_n); extends the cached prefix under a lock."""
    n = int(n)
    if n < -1:
        raise DomainError(f"Lehmer pair index must be >= -1, got {n}")
    if n + 1 < len(_pairs):
        return _pairs[n + 1]
    with _pairs_lock:
        while len(_pairs) < n + 2:
            m = len(_pairs) - 2  # index of the last cached pair
            prev = _pairs[-1]
            p_next = (
                IntPolynomial((2, 2 * m)) * prev.p
                + _TWO_X_ONE_MINUS_X * prev.p.derivative()
                + prev.q
            )
            q_next = (
                IntPolynomial((1, 2 * (m + 1))) * prev.q
                + _TWO_X_ONE_MINUS_X * prev.q.derivative()
            )
            pair = LehmerPair(m + 1, p_next, q_next)
            _check_pair(pair)
            _pairs.append(pair)
    return _pairs[n + 1]


@dataclass(frozen=True)
class ClosedFormValue:
    """Exact value of the form r + z sqrt(1-x) (a asin(z) + b pi), x = z^2.

    The three rational fields pin the value down exactly, so downstream
    checks can compare closed forms without ever rounding.
    """

    z_sq: Fraction
    rational_part: Fraction
    arcsin_coeff: Fraction
    pi_coeff: Fraction

    @property
    def kind(self) -> str:
        if self.arcsin_coeff == 0 and self.pi_coeff == 0:
            return "rational"
        return "closed-form"

    def to_float(self) -> float:
        x = float(self.z_sq)
        z = sqrt(x)
        root = z * sqrt(1.0 - x)
        return float(self.rational_part) + root * (
            float(self.arcsin_coeff) * asin(z) + float(self.pi_coeff) * pi
        )

    def __float__(self) -> float:
        return self.to_float()


def _resolve_x(z, z_sq) -> Fraction:
    if (z is None) == (z_sq is None):
        raise DomainError("pass exactly one of z or z_sq")
    x = Fr(z) * Fr(z) if z is not None else Fr(z_sq)
    if not 0 < x < 1:
        raise DomainError(f"z^2 must lie in (0, 1), got {x}")
    return x


def zeta_cb_closed(n: int, z=None, *, z_sq=None) -> ClosedFormValue:
    """Central binomial zeta at s = -n, exact in the argument x = z^2."""
    n = int(n)
    if n < -1:
        raise DomainError(f"closed form requires n >= -1, got {n}")
    x = _resolve_x(z, z_sq)
    pair = lehmer_pair(n)
    scale = Fr(2) ** n
    return ClosedFormValue(
        z_sq=x,
        rational_part=x * pair.p(x) / (scale * (1 - x) ** (n + 1)),
        arcsin_coeff=pair.q(x) / (scale * (1 - x) ** (n + 2)),
        pi_coeff=Fr(0),
    )


def eta_cb_closed(n: int, z=None, *, z_sq=None) -> ClosedFormValue:
    """Central binomial eta at s = -n, exact in the argument x = z^2."""
    n = int(n)
    if n < -1:
        raise DomainError(f"closed form requires n >= -1, got {n}")
    x = _resolve_x(z, z_sq)
    pair = lehmer_pair(n)
    return ClosedFormValue(
        z_sq=x,
        rational_part=Fr(0),
        arcsin_coeff=Fr(0),
        pi_coeff=pair.q(x) / (Fr(2) ** (n + 1) * (1 - x) ** (n + 2)),
    )


def sls_closed(n: int, x) -> Fraction:
    """Shifted log-sine value at s = -n as an exact rational in x = sin^2(sigma/2)."""
    n = int(n)
    if n < -1:
        raise DomainError(f"closed form requires n >= -1, got {n}")
    x = Fr(x)
    if not 0 < x < 1:
        raise DomainError(f"x must lie in (0, 1), got {x}")
    pair = lehmer_pair(n)
    return x * pair.p(x) / (Fr(2) ** n * (1 - x) ** (n + 1))


def _conv(a: list, b: list, order: int) -> list:
    out = [Fr(0)] * (order + 1)
    for i, ai in enumerate(a):
        if ai == 0:
            continue
        for j in range(order + 1 - i):
            bj = b[j]
            if bj != 0:
                out[i + j] += ai * bj
    return out


def eta_generating_check(z, order: int, rel_tol: float = 1e-8) -> list[EvalReport]:
    """Check pi z e^(t/2) / sqrt(1 - z^2 e^t) = sum_n eta_cb(1-n; z) t^n / n!.

    Both sides share the irrational prefactor pi z / sqrt(1-z^2), so the
    comparison reduces to exact rational equality coefficient by
    coefficient: the Taylor side is expanded with binomial coefficients
    and factorials only, the closed-form side uses the Lehmer q_n. Exact
    equality subsumes any positive rel_tol, so the parameter only
    documents the precision the caller relies on.
    """
    del rel_tol  # comparison is exact; see docstring
    order = int(order)
    if order < 0:
        raise DomainError(f"order must be >= 0, got {order}")
    zq = Fr(z)
    if not 0 < zq < 1:
        raise DomainError(f"z must lie in (0, 1), got {z}")
    x = zq * zq
    v = x / (1 - x)
    # e^(t/2) and w(t) = v (e^t - 1), as Taylor coefficient lists in t
    exp_half = [Fr(1, 2) ** j / factorial(j) for j in range(order + 1)]
    w = [Fr(0)] + [v / factorial(j) for j in range(1, order + 1)]
    # (1 - w)^(-1/2) = sum_i C(2i, i) / 4^i w^i
    binom_sum = [Fr(0)] * (order + 1)
    binom_sum[0] = Fr(1)
    w_pow = binom_sum.copy()
    for i in range(1, order + 1):
        w_pow = _conv(w_pow, w, order)
        ci = Fr(comb(2 * i, i), 4**i)
        binom_sum = [s + ci * t for s, t in zip(binom_sum, w_pow)]
    taylor = _conv(exp_half, binom_sum, order)
    reports = []
    for n in range(order + 1):
        t0 = time.perf_counter()
        lhs = taylor[n] * factorial(n)
        pair = lehmer_pair(n - 1)
        rhs = pair.q(x) / (Fr(2) ** n * (1 - x) ** n)
        ms = int((time.perf_counter() - t0) * 1000)
        reports.append(
            exact_report(f"eta-generating[z={rational_str(zq)}][n={n}]", lhs, rhs, ms)
        )
    return reports
