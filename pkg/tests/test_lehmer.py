"""Lehmer polynomial pairs and the exact closed forms built from them."""

import math
import threading
from fractions import Fraction as Fr

import pytest

import logsine.lehmer as lehmer_mod
from logsine import (
    ClosedFormValue,
    DomainError,
    IntPolynomial,
    LehmerPair,
    eta_cb_closed,
    eta_generating_check,
    lehmer_pair,
    sls_closed,
    zeta_cb_closed,
)

PUBLISHED_P = {
    -1: (),
    0: (1,),
    1: (3,),
    2: (7, 8),
    3: (15, 70, 20),
}

# hand-applied recurrence q_(n+1) = (2(n+1)x+1) q_n + 2x(1-x) q_n'
HAND_Q = {
    -1: (1,),
    0: (1,),
    1: (1, 2),
    2: (1, 10, 4),
}


def test_published_p_list():
    for n, coeffs in PUBLISHED_P.items():
        assert lehmer_pair(n).p.coeffs == coeffs


def test_hand_derived_q_list():
    for n, coeffs in HAND_Q.items():
        assert lehmer_pair(n).q.coeffs == coeffs


def test_pair_fields():
    pair = lehmer_pair(2)
    assert isinstance(pair, LehmerPair)
    assert pair.n == 2
    with pytest.raises(AttributeError):
        pair.n = 5


def test_degrees_and_positivity_to_30():
    for n in range(31):
        pair = lehmer_pair(n)
        assert all(c >= 0 for c in pair.p.coeffs)
        assert all(c >= 0 for c in pair.q.coeffs)
        assert pair.q.degree == n
        if n >= 1:
            assert pair.p.degree == n - 1


def test_recurrence_internal_consistency():
    # p_(n+1) - q_n must satisfy the homogeneous part of the recurrence
    dx = IntPolynomial((0, 2, -2))
    for n in range(0, 12):
        cur, nxt = lehmer_pair(n), lehmer_pair(n + 1)
        assert nxt.p.coeffs == (
            IntPolynomial((2, 2 * n)) * cur.p + dx * cur.p.derivative() + cur.q
        ).coeffs
        assert nxt.q.coeffs == (
            IntPolynomial((1, 2 * (n + 1))) * cur.q + dx * cur.q.derivative()
        ).coeffs


def test_negative_index_rejected():
    with pytest.raises(DomainError):
        lehmer_pair(-2)


def test_memo_is_thread_safe(monkeypatch):
    monkeypatch.setattr(
        lehmer_mod,
        "_pairs",
        [LehmerPair(-1, IntPolynomial(), IntPolynomial((1,)))],
    )
    results = []

    def worker():
        results.append(lehmer_pair(60))

    threads = [threading.Thread(target=worker) for _ in range(8)]
    for t in threads:
        t.start()
    for t in threads:
        t.join()
    assert len(results) == 8
    assert all(r.p.coeffs == results[0].p.coeffs for r in results)
    assert results[0].q.degree == 60


# ------------------------------------------------------------ closed forms


def test_sls_closed_frozen_values():
    assert sls_closed(0, Fr(1, 4)) == Fr(1, 3)
    assert sls_closed(1, Fr(1, 4)) == Fr(2, 3)
    assert sls_closed(3, Fr(1, 4)) == Fr(10, 3)
    assert sls_closed(-1, Fr(1, 4)) == 0


def test_sls_closed_formula_shape():
    # x p_n(x) / (2^n (1-x)^(n+1)) spot-checked against raw polynomials
    for n in (0, 2, 5):
        pair = lehmer_pair(n)
        for x in (Fr(1, 4), Fr(2, 5)):
            expected = x * pair.p(x) / (Fr(2) ** n * (1 - x) ** (n + 1))
            assert sls_closed(n, x) == expected


def test_sls_closed_domain():
    with pytest.raises(DomainError):
        sls_closed(-2, Fr(1, 4))
    with pytest.raises(DomainError):
        sls_closed(2, Fr(0))
    with pytest.raises(DomainError):
        sls_closed(2, Fr(1))


def test_zeta_closed_baseline():
    cf = zeta_cb_closed(-1, Fr(1, 2))
    assert cf.rational_part == 0
    assert cf.pi_coeff == 0
    assert cf.arcsin_coeff == Fr(8, 3)
    z = 0.5
    expected = 2.0 * z * math.asin(z) / math.sqrt(1.0 - z * z)
    assert math.isclose(cf.to_float(), expected, rel_tol=1e-14)


def test_eta_closed_baseline():
    cf = eta_cb_closed(-1, Fr(1, 2))
    assert cf.rational_part == 0
    assert cf.arcsin_coeff == 0
    z = 0.5
    expected = math.pi * z / math.sqrt(1.0 - z * z)
    assert math.isclose(cf.to_float(), expected, rel_tol=1e-14)


def test_zeta_closed_n0_components():
    cf = zeta_cb_closed(0, z_sq=Fr(1, 4))
    assert cf.rational_part == Fr(1, 3)
    assert cf.arcsin_coeff == Fr(16, 9)
    assert cf.pi_coeff == 0
    assert cf.kind == "closed-form"


def test_closed_form_kind_and_float():
    plain = ClosedFormValue(
        z_sq=Fr(1, 4), rational_part=Fr(5, 7), arcsin_coeff=Fr(0), pi_coeff=Fr(0)
    )
    assert plain.kind == "rational"
    assert float(plain) == pytest.approx(5.0 / 7.0, rel=1e-15)
    assert float(eta_cb_closed(2, Fr(1, 2))) == pytest.approx(
        eta_cb_closed(2, Fr(1, 2)).to_float()
    )


def test_arcsin_elimination_exact():
    for n in range(-1, 13):
        for x in (Fr(1, 4), Fr(1, 2), Fr(3, 4)):
            zeta_cf = zeta_cb_closed(n, z_sq=x)
            eta_cf = eta_cb_closed(n, z_sq=x)
            assert zeta_cf.arcsin_coeff == 2 * eta_cf.pi_coeff
            assert zeta_cf.rational_part == sls_closed(n, x)
            assert eta_cf.rational_part == 0
            assert eta_cf.arcsin_coeff == 0


def test_argument_passing_rules():
    with pytest.raises(DomainError):
        zeta_cb_closed(2)
    with pytest.raises(DomainError):
        zeta_cb_closed(2, Fr(1, 2), z_sq=Fr(1, 4))
    with pytest.raises(DomainError):
        eta_cb_closed(2, z_sq=Fr(3, 2))
    with pytest.raises(DomainError):
        eta_cb_closed(2, z_sq=Fr(0))
    with pytest.raises(DomainError):
        zeta_cb_closed(-3, Fr(1, 2))
    # z and z_sq routes agree
    assert zeta_cb_closed(3, Fr(1, 2)) == zeta_cb_closed(3, z_sq=Fr(1, 4))


# ------------------------------------------------- generating function


def test_eta_generating_reports_pass():
    reports = eta_generating_check(Fr(1, 2), 5)
    assert len(reports) == 6
    assert all(r.passed for r in reports)
    assert all(r.exact for r in reports)
    assert reports[3].identity_id == "eta-generating[z=1/2][n=3]"


def test_eta_generating_domain():
    with pytest.raises(DomainError):
        eta_generating_check(Fr(3, 2), 4)
    with pytest.raises(DomainError):
        eta_generating_check(Fr(1, 2), -1)
