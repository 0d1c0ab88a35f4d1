"""Exact arithmetic substrate: rationals, polynomials, truncated power series.

Every container here is immutable and every operation returns a new value,
so instances are safe to share across threads. Rationals are
``fractions.Fraction``; they are always stored reduced with positive
denominator (the stdlib guarantees both).
"""

from __future__ import annotations

from dataclasses import dataclass
from fractions import Fraction
from math import factorial
from typing import Union

from .errors import CompositionError, DivisionError, ValuationError

Rational = Fraction
Fr = Fraction  # local binding, also keeps call sites short

RationalLike = Union[int, Fraction]


def rational_str(q: Fraction) -> str:
    """Render a rational as ``num/den``, or just ``num`` when den == 1."""
    q = Fr(q)
    if q.denominator == 1:
        return str(q.numerator)
    return f"{q.numerator}/{q.denominator}"


def parse_rational(text: str) -> Fraction:
    """Parse the ``num/den`` form produced by rational_str."""
    return Fr(text.strip())


def _as_fraction(x: RationalLike) -> Fraction:
    if isinstance(x, Fraction):
        return x
    if isinstance(x, int):
        return Fr(x)
    raise TypeError(f"expected int or Fraction, got {type(x).__name__}")


@dataclass(frozen=True)
class IntPolynomial:
    """Polynomial with integer coefficients, stored ascending by degree.

    Trailing zeros are stripped on construction; the zero polynomial is
    the empty tuple and reports degree -1.
    """

    coeffs: tuple[int, ...]

    def __init__(self, coeffs=()):
        cs = [int(c) for c in coeffs]
        while cs and cs[-1] == 0:
            cs.pop()
        object.__setattr__(self, "coeffs", tuple(cs))

    @property
    def degree(self) -> int:
        return len(self.coeffs) - 1

    def is_zero(self) -> bool:
        return not self.coeffs

    def __bool__(self) -> bool:
        return bool(self.coeffs)

    def __add__(self, other: "IntPolynomial") -> "IntPolynomial":
        a, b = self.coeffs, other.coeffs
        n = max(len(a), len(b))
        return IntPolynomial(
            (a[i] if i < len(a) else 0) + (b[i] if i < len(b) else 0) for i in range(n)
        )

    def __sub__(self, other: "IntPolynomial") -> "IntPolynomial":
        a, b = self.coeffs, other.coeffs
        n = max(len(a), len(b))
        return IntPolynomial(
            (a[i] if i < len(a) else 0) - (b[i] if i < len(b) else 0) for i in range(n)
        )

    def __mul__(self, other) -> "IntPolynomial":
        if isinstance(other, int):
            return IntPolynomial(c * other for c in self.coeffs)
        if not isinstance(other, IntPolynomial):
            return NotImplemented
        if self.is_zero() or other.is_zero():
            return IntPolynomial()
        out = [0] * (len(self.coeffs) + len(other.coeffs) - 1)
        for i, a in enumerate(self.coeffs):
            if a == 0:
                continue
            for j, b in enumerate(other.coeffs):
                out[i + j] += a * b
        return IntPolynomial(out)

    __rmul__ = __mul__

    def derivative(self) -> "IntPolynomial":
        return IntPolynomial(i * c for i, c in enumerate(self.coeffs) if i > 0)

    def __call__(self, x):
        """Evaluate by Horner's rule; the result type follows the argument."""
        acc = 0 * x
        for c in reversed(self.coeffs):
            acc = acc * x + c
        return acc


@dataclass(frozen=True)
class RationalPolynomial:
    """Polynomial with rational coefficients, ascending by degree."""

    coeffs: tuple[Fraction, ...]

    def __init__(self, coeffs=()):
        cs = [_as_fraction(c) for c in coeffs]
        while cs and cs[-1] == 0:
            cs.pop()
        object.__setattr__(self, "coeffs", tuple(cs))

    @property
    def degree(self) -> int:
        return len(self.coeffs) - 1

    def __call__(self, x):
        acc = 0 * x
        for c in reversed(self.coeffs):
            acc = acc * x + c
        return acc

    def float_coeffs(self) -> list[float]:
        return [float(c) for c in self.coeffs]


@dataclass(frozen=True)
class TruncatedSeries:
    """Power series truncated at a fixed order.

    ``coeffs`` always has length ``order + 1``; coefficient i multiplies x^i.
    Binary operations truncate to the smaller order of the two operands,
    which keeps every stored coefficient exact.
    """

    order: int
    coeffs: tuple[Fraction, ...]

    def __init__(self, order: int, coeffs=()):
        order = int(order)
        if order < 0:
            raise ValueError("truncation order must be >= 0")
        cs = [_as_fraction(c) for c in coeffs]
        if len(cs) > order + 1:
            raise ValueError("more coefficients than the truncation order allows")
        cs.extend([Fr(0)] * (order + 1 - len(cs)))
        object.__setattr__(self, "order", order)
        object.__setattr__(self, "coeffs", tuple(cs))

    @classmethod
    def zero(cls, order: int) -> "TruncatedSeries":
        return cls(order)

    @classmethod
    def one(cls, order: int) -> "TruncatedSeries":
        return cls(order, (Fr(1),))

    @classmethod
    def x(cls, order: int) -> "TruncatedSeries":
        if order < 1:
            raise ValueError("order must be >= 1 to represent x")
        return cls(order, (Fr(0), Fr(1)))

    def valuation(self):
        """Index of the first nonzero coefficient, or None if all vanish."""
        for i, c in enumerate(self.coeffs):
            if c != 0:
                return i
        return None

    def truncate(self, order: int) -> "TruncatedSeries":
        if order >= self.order:
            return TruncatedSeries(order, self.coeffs)
        return TruncatedSeries(order, self.coeffs[: order + 1])

    def __add__(self, other: "TruncatedSeries") -> "TruncatedSeries":
        n = min(self.order, other.order)
        return TruncatedSeries(n, tuple(a + b for a, b in zip(self.coeffs, other.coeffs)))

    def __sub__(self, other: "TruncatedSeries") -> "TruncatedSeries":
        n = min(self.order, other.order)
        return TruncatedSeries(n, tuple(a - b for a, b in zip(self.coeffs, other.coeffs)))

    def __mul__(self, other) -> "TruncatedSeries":
        if isinstance(other, (int, Fraction)):
            return TruncatedSeries(self.order, tuple(c * other for c in self.coeffs))
        if not isinstance(other, TruncatedSeries):
            return NotImplemented
        n = min(self.order, other.order)
        out = [Fr(0)] * (n + 1)
        for i, a in enumerate(self.coeffs[: n + 1]):
            if a == 0:
                continue
            for j in range(n + 1 - i):
                b = other.coeffs[j]
                if b != 0:
                    out[i + j] += a * b
        return TruncatedSeries(n, out)

    __rmul__ = __mul__

    def __neg__(self) -> "TruncatedSeries":
        return TruncatedSeries(self.order, tuple(-c for c in self.coeffs))


def series_multiply(a: TruncatedSeries, b: TruncatedSeries) -> TruncatedSeries:
    """Product truncated to min(a.order, b.order)."""
    return a * b


def series_compose(outer: TruncatedSeries, inner: TruncatedSeries) -> TruncatedSeries:
    """outer(inner(x)) truncated to min of the two orders.

    The inner series must have zero constant term, otherwise infinitely
    many outer coefficients would contribute to each output coefficient.
    """
    if inner.coeffs[0] != 0:
        raise CompositionError("inner series must have zero constant term")
    n = min(outer.order, inner.order)
    g = inner.truncate(n)
    acc = TruncatedSeries.zero(n)
    for k in range(min(outer.order, n), -1, -1):
        acc = acc * g + TruncatedSeries(n, (outer.coeffs[k],))
    return acc


def series_divide(num: TruncatedSeries, den: TruncatedSeries) -> TruncatedSeries:
    """Quotient num/den of truncated series.

    A denominator with valuation v > 0 is treated as exactly divisible:
    the quotient is computed from the shifted coefficients and its
    truncation order drops to num.order - v. The numerator must not
    vanish to lower order than the denominator.
    """
    v = den.valuation()
    if v is None:
        raise DivisionError("division by the zero series")
    nv = num.valuation()
    if nv is None:
        # zero numerator: quotient is zero wherever it is representable
        if num.order - v < 0:
            raise ValuationError("truncation order too small to represent the quotient")
        return TruncatedSeries.zero(num.order - v)
    if nv < v:
        raise ValuationError(
            f"numerator valuation {nv} is below denominator valuation {v}"
        )
    n = num.order - v
    a = [num.coeffs[i + v] for i in range(n + 1)]
    b = [den.coeffs[i + v] if i + v <= den.order else Fr(0) for i in range(n + 1)]
    q = [Fr(0)] * (n + 1)
    for i in range(n + 1):
        s = a[i]
        for j in range(1, i + 1):
            if b[j] != 0 and q[i - j] != 0:
                s -= b[j] * q[i - j]
        q[i] = s / b[0]
    return TruncatedSeries(n, q)


def series_exp_em1(order: int) -> TruncatedSeries:
    """Truncated expansion of 1 - exp(-x): sum_{i>=1} (-1)^(i+1) x^i / i!."""
    if order < 0:
        raise ValueError("order must be >= 0")
    cs = [Fr(0)]
    sign = 1
    for i in range(1, order + 1):
        cs.append(Fr(sign, factorial(i)))
        sign = -sign
    return TruncatedSeries(order, cs)


def series_polylog(k: int, inner: TruncatedSeries, order: int) -> TruncatedSeries:
    """Polylogarithm Li_k composed with a series of zero constant term.

    Computes sum_{m>=1} inner(x)^m / m^k truncated at ``order``. Negative k
    weights by positive powers of m, so the same loop covers both the
    classical polylogarithms and their negative-index relatives.
    """
    if inner.coeffs[0] != 0:
        raise CompositionError("inner series must have zero constant term")
    k = int(k)
    if order < 0:
        raise ValueError("order must be >= 0")
    g = inner.truncate(order)
    acc = TruncatedSeries.zero(order)
    pw = TruncatedSeries.one(order)
    for m in range(1, order + 1):
        pw = pw * g
        if pw.valuation() is None:
            break
        acc = acc + pw * (Fr(m) ** (-k))
    return acc
