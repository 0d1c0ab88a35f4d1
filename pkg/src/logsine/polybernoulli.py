"""Poly-Bernoulli numbers B_n^(k) and classical Bernoulli machinery.

B_n^(k) is n! times the x^n coefficient of Li_k(1 - exp(-x)) / (1 - exp(-x)).
The k = 1 column reproduces the classical Bernoulli numbers with the
B_1 = +1/2 convention; bernoulli_polynomial below uses the standard
B_1 = -1/2 convention expected by the Fourier-side integral identities.
"""

from __future__ import annotations

from dataclasses import dataclass
from fractions import Fraction
from functools import lru_cache
from math import comb, factorial

from .errors import DomainError
from .exact import (
    RationalPolynomial,
    TruncatedSeries,
    series_divide,
    series_exp_em1,
    series_polylog,
)

Fr = Fraction


@lru_cache(maxsize=None)
def _pb_series(k: int, order: int) -> TruncatedSeries:
    """Li_k(1 - e^-x) / (1 - e^-x) truncated at ``order``.

    The division by a valuation-1 denominator costs one order, so the
    generating series is built internally at order + 1.
    """
    u = series_exp_em1(order + 1)
    num = series_polylog(k, u, order + 1)
    return series_divide(num, u)


def poly_bernoulli(n: int, k: int) -> Fraction:
    """Exact poly-Bernoulli number B_n^(k)."""
    n = int(n)
    k = int(k)
    if n < 0:
        raise DomainError(f"poly-Bernoulli index n must be >= 0, got {n}")
    return factorial(n) * _pb_series(k, n).coeffs[n]


@dataclass(frozen=True)
class PolyBernoulliTable:
    """Rectangular table of B_n^(k) for 0 <= n <= max_n, k_min <= k <= k_max.

    Built column by column so each k costs a single series expansion.
    """

    max_n: int
    k_min: int
    k_max: int
    values: dict

    @classmethod
    def build(cls, max_n: int, k_min: int, k_max: int) -> "PolyBernoulliTable":
        if max_n < 0:
            raise DomainError(f"max_n must be >= 0, got {max_n}")
        if k_min > k_max:
            raise DomainError(f"empty k range: [{k_min}, {k_max}]")
        values = {}
        for k in range(k_min, k_max + 1):
            col = _pb_series(k, max_n)
            fact = 1
            for n in range(max_n + 1):
                values[(n, k)] = fact * col.coeffs[n]
                fact *= n + 1
        return cls(max_n=max_n, k_min=k_min, k_max=k_max, values=values)

    def value(self, n: int, k: int) -> Fraction:
        try:
            return self.values[(n, k)]
        except KeyError:
            raise DomainError(f"({n}, {k}) outside table range") from None


def antidiagonal_sum(n: int, table: PolyBernoulliTable | None = None) -> Fraction:
    """sum_{k=0}^{n} B_{n-k}^(-k), the anti-diagonal through (n, 0)."""
    n = int(n)
    if n < 0:
        raise DomainError(f"anti-diagonal index must be >= 0, got {n}")
    if table is not None:
        if table.max_n < n or table.k_min > -n or table.k_max < 0:
            raise DomainError(f"table does not cover anti-diagonal {n}")
        return sum((table.value(n - k, -k) for k in range(n + 1)), Fr(0))
    return sum((poly_bernoulli(n - k, -k) for k in range(n + 1)), Fr(0))


def classical_bernoulli(j: int) -> Fraction:
    """Classical Bernoulli number with the B_1 = -1/2 sign convention."""
    j = int(j)
    if j < 0:
        raise DomainError(f"Bernoulli index must be >= 0, got {j}")
    if j == 1:
        return Fr(-1, 2)
    return poly_bernoulli(j, 1)


def bernoulli_polynomial(n: int) -> RationalPolynomial:
    """Bernoulli polynomial B_n(x) = sum_j C(n, j) B_j x^(n-j)."""
    n = int(n)
    if n < 0:
        raise DomainError(f"Bernoulli polynomial index must be >= 0, got {n}")
    coeffs = [Fr(0)] * (n + 1)
    for j in range(n + 1):
        coeffs[n - j] = comb(n, j) * classical_bernoulli(j)
    return RationalPolynomial(coeffs)
