"""Poly-Bernoulli numbers against independent combinatorial oracles."""

from fractions import Fraction as Fr
from functools import lru_cache

import pytest

from logsine import (
    DomainError,
    PolyBernoulliTable,
    antidiagonal_sum,
    bernoulli_polynomial,
    classical_bernoulli,
    poly_bernoulli,
    sls_closed,
)


@lru_cache(maxsize=None)
def stirling2(n, m):
    # partitions of an n-set into m nonempty blocks
    if n == 0:
        return 1 if m == 0 else 0
    if m == 0 or m > n:
        return 0
    return m * stirling2(n - 1, m) + stirling2(n - 1, m - 1)


def factorial_int(m):
    out = 1
    for i in range(2, m + 1):
        out *= i
    return out


def pb_oracle(n, k):
    """Closed-formula oracle: sum of (-1)^(m+n) m! S(n,m) / (m+1)^k."""
    return sum(
        (-1) ** (m + n) * factorial_int(m) * stirling2(n, m) * Fr(m + 1) ** (-k)
        for m in range(n + 1)
    )


def bernoulli_at_oracle(count):
    """Akiyama-Tanigawa transform; yields B_0, B_1 (=+1/2), B_2, ..."""
    a = []
    for n in range(count):
        a.append(Fr(1, n + 1))
        for j in range(n, 0, -1):
            a[j - 1] = j * (a[j - 1] - a[j])
        yield a[0]


def test_pb_oracle_spot_values():
    # the oracle itself is pinned before it is trusted
    assert pb_oracle(1, 2) == Fr(1, 4)
    assert pb_oracle(2, 1) == Fr(1, 6)
    assert pb_oracle(1, -1) == 2


@pytest.mark.parametrize("k", [-8, -3, -1, 0, 1, 2, 5])
def test_poly_bernoulli_matches_oracle(k):
    for n in range(11):
        assert poly_bernoulli(n, k) == pb_oracle(n, k)


def test_poly_bernoulli_base_cases():
    for k in range(-6, 7):
        assert poly_bernoulli(0, k) == 1
    for n in range(0, 15):
        assert poly_bernoulli(n, 0) == 1
    assert poly_bernoulli(1, 2) == Fr(1, 4)


def test_poly_bernoulli_rejects_negative_n():
    with pytest.raises(DomainError):
        poly_bernoulli(-1, 2)


def test_classical_column_akiyama_tanigawa():
    for n, expected in enumerate(bernoulli_at_oracle(21)):
        assert poly_bernoulli(n, 1) == expected


def test_odd_classical_bernoulli_vanish():
    for m in range(1, 11):
        assert poly_bernoulli(2 * m + 1, 1) == 0


def test_duality_negative_upper_index():
    for n in range(13):
        for k in range(13):
            assert poly_bernoulli(n, -k) == poly_bernoulli(k, -n)


def test_classical_bernoulli_sign_convention():
    assert classical_bernoulli(1) == Fr(-1, 2)
    assert poly_bernoulli(1, 1) == Fr(1, 2)
    assert classical_bernoulli(0) == 1
    assert classical_bernoulli(2) == Fr(1, 6)
    for j in (0, 2, 3, 4, 5, 6):
        assert classical_bernoulli(j) == poly_bernoulli(j, 1)


def test_bernoulli_polynomial_low_degrees():
    assert bernoulli_polynomial(0).coeffs == (Fr(1),)
    assert bernoulli_polynomial(1).coeffs == (Fr(-1, 2), Fr(1))
    assert bernoulli_polynomial(2).coeffs == (Fr(1, 6), Fr(-1), Fr(1))


def test_bernoulli_polynomial_difference_property():
    # B_n(x+1) - B_n(x) = n x^(n-1), checked at n+1 points pins the identity
    for n in range(1, 13):
        b = bernoulli_polynomial(n)
        for i in range(n + 1):
            x = Fr(i, 3)
            assert b(x + 1) - b(x) == n * x ** (n - 1)


def test_bernoulli_polynomial_reflection():
    for n in range(9):
        b = bernoulli_polynomial(n)
        for i in range(5):
            x = Fr(i, 7)
            assert b(1 - x) == (-1) ** n * b(x)


def test_bernoulli_polynomial_endpoints():
    for n in range(21):
        b = bernoulli_polynomial(n)
        assert b(Fr(0)) == classical_bernoulli(n)
        assert b(Fr(1)) == poly_bernoulli(n, 1)


def test_table_matches_pointwise(pb_table_30):
    for n in (0, 1, 5, 17, 30):
        for k in (-30, -7, -1, 0, 1):
            assert pb_table_30.value(n, k) == poly_bernoulli(n, k)


def test_table_base_invariants(pb_table_30):
    for k in range(-30, 2):
        assert pb_table_30.value(0, k) == 1
    for n in range(31):
        assert pb_table_30.value(n, 0) == 1


def test_table_range_checks(pb_table_30):
    with pytest.raises(DomainError):
        pb_table_30.value(31, 0)
    with pytest.raises(DomainError):
        pb_table_30.value(3, 2)
    with pytest.raises(DomainError):
        PolyBernoulliTable.build(-1, 0, 0)
    with pytest.raises(DomainError):
        PolyBernoulliTable.build(5, 3, 1)


def test_antidiagonal_small_values():
    assert antidiagonal_sum(0) == 1
    assert antidiagonal_sum(1) == 2
    assert antidiagonal_sum(2) == 4
    assert antidiagonal_sum(2) == 3 * sls_closed(2, Fr(1, 4))


def test_antidiagonal_table_agrees_with_direct(pb_table_30):
    for n in range(9):
        assert antidiagonal_sum(n, pb_table_30) == antidiagonal_sum(n)


def test_antidiagonal_table_coverage_check(pb_table_30):
    with pytest.raises(DomainError):
        antidiagonal_sum(31, pb_table_30)
    narrow = PolyBernoulliTable.build(4, -2, 0)
    with pytest.raises(DomainError):
        antidiagonal_sum(4, narrow)
