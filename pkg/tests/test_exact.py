"""Exact substrate: rationals, integer polynomials, truncated series."""

from fractions import Fraction as Fr

import pytest
from hypothesis import given, settings
from hypothesis import strategies as st

from logsine import (
    CompositionError,
    DivisionError,
    IntPolynomial,
    RationalPolynomial,
    TruncatedSeries,
    ValuationError,
    parse_rational,
    rational_str,
    series_compose,
    series_divide,
    series_exp_em1,
    series_multiply,
    series_polylog,
)

rationals = st.fractions(
    min_value=-100, max_value=100, max_denominator=40
)


def series(order, coeffs):
    return TruncatedSeries(order, [Fr(c) for c in coeffs])


# ---------------------------------------------------------------- rationals


def test_rational_str_integer():
    assert rational_str(Fr(7)) == "7"
    assert rational_str(Fr(0)) == "0"


def test_rational_str_fraction():
    assert rational_str(Fr(-3, 8)) == "-3/8"
    assert rational_str(Fr(6, 4)) == "3/2"


@settings(max_examples=200, deadline=None, derandomize=True)
@given(rationals)
def test_rational_str_roundtrip(q):
    assert parse_rational(rational_str(q)) == q


# ---------------------------------------------------- integer polynomials


def test_int_polynomial_normalization():
    p = IntPolynomial((1, 2, 0, 0))
    assert p.coeffs == (1, 2)
    assert p.degree == 1
    assert IntPolynomial((0, 0)).is_zero()
    assert IntPolynomial().degree == -1
    assert not IntPolynomial()


def test_int_polynomial_arithmetic():
    p = IntPolynomial((1, 2))  # 1 + 2x
    q = IntPolynomial((0, 3, 4))  # 3x + 4x^2
    assert (p + q).coeffs == (1, 5, 4)
    assert (p - q).coeffs == (1, -1, -4)
    assert (p * q).coeffs == (0, 3, 10, 8)
    assert (3 * p).coeffs == (3, 6)
    assert (p - p).is_zero()


def test_int_polynomial_derivative_and_eval():
    p = IntPolynomial((5, 0, 3))  # 5 + 3x^2
    assert p.derivative().coeffs == (0, 6)
    assert p(2) == 17
    assert p(Fr(1, 2)) == Fr(23, 4)
    assert isinstance(p(Fr(1, 2)), Fr)


def test_rational_polynomial():
    p = RationalPolynomial((Fr(1, 6), -1, 1))  # 1/6 - x + x^2
    assert p.degree == 2
    assert p(Fr(1, 2)) == Fr(-1, 12)
    assert p.float_coeffs() == [1.0 / 6.0, -1.0, 1.0]


# ---------------------------------------------------------- series basics


def test_series_pads_and_validates():
    s = TruncatedSeries(3, (Fr(1),))
    assert s.coeffs == (Fr(1), Fr(0), Fr(0), Fr(0))
    with pytest.raises(ValueError):
        TruncatedSeries(1, (Fr(1), Fr(1), Fr(1)))
    with pytest.raises(ValueError):
        TruncatedSeries(-1)


def test_series_valuation():
    assert TruncatedSeries.zero(4).valuation() is None
    assert series(4, [0, 0, 5]).valuation() == 2
    assert TruncatedSeries.one(2).valuation() == 0


def test_series_truncate_both_ways():
    s = series(2, [1, 2, 3])
    assert s.truncate(1).coeffs == (Fr(1), Fr(2))
    assert s.truncate(4).coeffs == (Fr(1), Fr(2), Fr(3), Fr(0), Fr(0))


def test_series_exp_em1_examples():
    assert series_exp_em1(0).coeffs == (Fr(0),)
    assert series_exp_em1(2).coeffs == (Fr(0), Fr(1), Fr(-1, 2))
    assert series_exp_em1(4).coeffs == (Fr(0), Fr(1), Fr(-1, 2), Fr(1, 6), Fr(-1, 24))


def test_series_polylog_examples():
    x = TruncatedSeries.x(3)
    assert series_polylog(1, x, 3).coeffs == (Fr(0), Fr(1), Fr(1, 2), Fr(1, 3))
    assert series_polylog(0, x, 3).coeffs == (Fr(0), Fr(1), Fr(1), Fr(1))
    assert series_polylog(-1, x, 3).coeffs == (Fr(0), Fr(1), Fr(2), Fr(3))


@pytest.mark.parametrize("k", range(-6, 7))
def test_series_polylog_coefficients_any_weight(k):
    out = series_polylog(k, TruncatedSeries.x(12), 12)
    assert out.coeffs[0] == 0
    for m in range(1, 13):
        assert out.coeffs[m] == Fr(m) ** (-k)


def test_series_polylog_rejects_constant_term():
    with pytest.raises(CompositionError):
        series_polylog(2, TruncatedSeries.one(3), 3)


def test_series_divide_examples():
    out = series_divide(series(2, [0, 1, 1]), series(1, [0, 1]))
    assert (out.order, out.coeffs) == (1, (Fr(1), Fr(1)))
    out = series_divide(series(1, [0, 1]), series(1, [0, 1]))
    assert (out.order, out.coeffs) == (0, (Fr(1),))
    f = series_exp_em1(3)
    out = series_divide(f, f)
    assert (out.order, out.coeffs) == (2, (Fr(1), Fr(0), Fr(0)))


def test_series_divide_errors():
    with pytest.raises(DivisionError):
        series_divide(series(2, [0, 1]), TruncatedSeries.zero(2))
    with pytest.raises(ValuationError):
        series_divide(series(2, [1, 1]), series(2, [0, 1]))


def test_series_divide_zero_numerator():
    out = series_divide(TruncatedSeries.zero(3), series(3, [0, 2]))
    assert (out.order, out.coeffs) == (2, (Fr(0), Fr(0), Fr(0)))


def test_series_compose_small_case():
    outer = series(2, [1, 1, 1])
    inner = series(2, [0, 1, 1])
    # 1 + (x + x^2) + (x + x^2)^2 truncated at order 2
    assert series_compose(outer, inner).coeffs == (Fr(1), Fr(1), Fr(2))


def test_series_compose_rejects_constant_term():
    with pytest.raises(CompositionError):
        series_compose(series(2, [1, 1]), series(2, [1, 1]))


def test_series_compose_geometric_identity():
    # 1/(1 - u) at u = 1 - e^(-x) is e^x
    order = 8
    geom = TruncatedSeries(order, [Fr(1)] * (order + 1))
    out = series_compose(geom, series_exp_em1(order))
    from math import factorial

    assert out.coeffs == tuple(Fr(1, factorial(i)) for i in range(order + 1))


# ------------------------------------------------------- algebraic laws


series_strategy = st.builds(
    lambda cs: TruncatedSeries(6, cs),
    st.lists(rationals, min_size=0, max_size=7),
)

unit_series = st.builds(
    lambda c0, cs: TruncatedSeries(6, [c0] + cs),
    rationals.filter(lambda q: q != 0),
    st.lists(rationals, min_size=0, max_size=6),
)


@settings(max_examples=100, deadline=None, derandomize=True)
@given(series_strategy, series_strategy, series_strategy)
def test_series_ring_laws(a, b, c):
    assert (a + b).coeffs == (b + a).coeffs
    assert ((a + b) + c).coeffs == (a + (b + c)).coeffs
    assert (a * b).coeffs == (b * a).coeffs
    assert ((a * b) * c).coeffs == (a * (b * c)).coeffs
    assert (a * (b + c)).coeffs == (a * b + a * c).coeffs
    one = TruncatedSeries.one(6)
    zero = TruncatedSeries.zero(6)
    assert (a * one).coeffs == a.coeffs
    assert (a + zero).coeffs == a.coeffs
    assert (a + (-a)).coeffs == zero.coeffs


@settings(max_examples=100, deadline=None, derandomize=True)
@given(series_strategy, unit_series)
def test_series_divide_inverts_multiply(a, b):
    assert series_divide(series_multiply(a, b), b).coeffs == a.coeffs
