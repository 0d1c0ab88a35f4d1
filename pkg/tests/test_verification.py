"""Verification suites: every encoded identity must hold, deterministically."""

import math
from fractions import Fraction as Fr

import pytest

from logsine import run_full_suite
from logsine.verification import (
    verify_classical_log_sine,
    verify_closed_form_elimination,
    verify_eta_generating,
    verify_integrand_linearity,
    verify_lehmer_closed_forms,
    verify_lehmer_polynomial_list,
    verify_main_theorem_exact,
    verify_main_theorem_general,
    verify_mzv_reduction,
    verify_series_vs_integral,
    verify_sls_at_one,
    verify_umezawa_quadrature,
    verify_umezawa_series,
)

def ids_of(reports):
    return [r.identity_id for r in reports]


def test_empty_suite_selection():
    assert run_full_suite(suites=()) == []


def test_exact_suite_all_pass(pb_table_30):
    reports = verify_main_theorem_exact(30, pb_table_30)
    assert len(reports) == 31
    assert all(r.passed for r in reports)
    assert all(r.exact for r in reports)
    assert len(set(ids_of(reports))) == 31


def test_polynomial_list_report():
    report = verify_lehmer_polynomial_list()
    assert report.passed
    assert report.to_dict()["tolerance"] == "exact"


def test_elimination_reports():
    reports = verify_closed_form_elimination(6)
    assert len(reports) == 7
    assert all(r.passed for r in reports)


def test_eta_generating_reports():
    reports = verify_eta_generating()
    assert all(r.passed for r in reports)
    # two z values, orders 0..6 each
    assert len(reports) == 14


def test_series_side_checks():
    assert all(r.passed for r in verify_lehmer_closed_forms(n_max=3, z_grid=(0.3, 0.5)))
    assert all(r.passed for r in verify_main_theorem_general(4))
    assert all(r.passed for r in verify_sls_at_one())
    assert verify_mzv_reduction().passed
    assert all(r.passed for r in verify_umezawa_series())


def test_main_theorem_general_rejects_large_x():
    with pytest.raises(ValueError):
        verify_main_theorem_general(2, x_grid=(Fr(19, 20),))


def test_quad_side_checks():
    assert all(r.passed for r in verify_umezawa_quadrature())
    light = verify_series_vs_integral(s_grid=(2.0, 3.0), sigma_grid=(math.pi / 3,))
    assert len(light) == 6
    assert all(r.passed for r in light)
    assert all(
        r.passed for r in verify_integrand_linearity(s_grid=(2.5,), sigma_grid=(1.0,))
    )
    assert all(r.passed for r in verify_classical_log_sine())


def test_full_suite_streams_progress():
    seen = []
    reports = run_full_suite(
        suites=("exact",), n_max_exact=8, progress=seen.append
    )
    assert seen == reports
    assert all(r.passed for r in reports)


def test_determinism_of_exact_suite():
    a = run_full_suite(suites=("exact",), n_max_exact=6)
    b = run_full_suite(suites=("exact",), n_max_exact=6)
    assert ids_of(a) == ids_of(b)
    assert [r.lhs for r in a] == [r.lhs for r in b]
    assert [r.passed for r in a] == [r.passed for r in b]
