# backend/tests/test_progressions.py
from __future__ import annotations

import numpy as np
import pytest

from app.congruence.accessors import SequenceAccessor, build_accessor, nuk_accessor
from app.congruence.checks import CheckReport, report_from_failures, timed_call
from app.congruence.progressions import (
    THEOREM_PROGRESSIONS,
    ProgressionReport,
    divisor_facts_check,
    kim_mod8_check,
    kim_parity_equivalence,
    nu1_odd_order_check,
    nu2_parity_criterion_check,
    progression_terms,
    verify_progression,
)
from app.errors import DomainError


def test_progression_terms_start():
    assert progression_terms(36, 30, 120).tolist() == [30, 66, 102]
    assert progression_terms(5, 0, 16).tolist() == [5, 10, 15]
    with pytest.raises(DomainError):
        progression_terms(4, 4, 10)


def test_nu2_mod4_on_16n_plus_14(tables):
    nu2 = build_accessor("nu2", 20_000, 4, tables=tables)
    report = verify_progression(nu2, 16, 14, 4, 20_000)
    assert report.passed
    assert report.status == "pass"
    assert report.terms == len(range(14, 20_001, 16))
    assert report.check_id == "nu2-16-14-mod4"


@pytest.mark.parametrize("A, B", THEOREM_PROGRESSIONS)
def test_nu2_mod4_theorem_progressions(tables, A, B):
    nu2 = build_accessor("nu2", 20_000, 4, tables=tables)
    assert verify_progression(nu2, A, B, 4, 20_000).passed


def test_first_counterexample_is_reported(tables):
    nu2 = build_accessor("nu2", 100, 4, tables=tables)
    report = verify_progression(nu2, 2, 1, 4, 100)
    assert report.status == "counterexample"
    assert report.counterexample == (3, 1)
    assert report.to_check().counterexample == "n=3 value=1"


def test_verify_progression_requires_bound(tables):
    nu2 = build_accessor("nu2", 100, 4, tables=tables)
    with pytest.raises(DomainError):
        verify_progression(nu2, 36, 30, 4, 200)


def test_progression_report_validates_counterexample():
    with pytest.raises(DomainError):
        ProgressionReport("nu2", 36, 30, 4, 100, counterexample=(31, 1))
    with pytest.raises(DomainError):
        ProgressionReport("nu2", 36, 30, 4, 100, counterexample=(30, 8))


@pytest.mark.parametrize("A, B", THEOREM_PROGRESSIONS)
def test_nu3_mod2_theorem_progressions(A, B):
    nu3 = build_accessor("nu3", 5_000, 2)
    assert verify_progression(nu3, A, B, 2, 5_000).passed


def test_nu3_backends_agree(small_tables):
    dp = build_accessor("nu3", 200, 2, backend="dp")
    formula = build_accessor("nu3", 200, 2, backend="formula", tables=small_tables)
    assert np.array_equal(dp.values % 2, formula.values % 2)


@pytest.mark.parametrize("A, B", THEOREM_PROGRESSIONS)
def test_overpartition_mod16_theorem_progressions(A, B):
    series = build_accessor("overpartition", 20_000, 16)
    assert verify_progression(series, A, B, 16, 20_000).passed


def test_accessor_dispatch_errors():
    with pytest.raises(DomainError):
        build_accessor("nu2", 10, 4, backend="series")
    with pytest.raises(DomainError):
        build_accessor("overpartition", 10, 16, backend="dp")
    with pytest.raises(DomainError):
        build_accessor("pbar", 10, 16)
    with pytest.raises(DomainError):
        nuk_accessor(9, 10, 2)


def test_sequence_accessor_call():
    accessor = SequenceAccessor("nu1", "formula", np.array([0, 1, 2, 2]))
    assert accessor(2) == 2
    assert accessor.bound == 3
    with pytest.raises(DomainError):
        accessor(4)


def test_kim_mod8():
    assert kim_mod8_check(20_000).passed


def test_kim_parity_equivalence(tables):
    assert kim_parity_equivalence(20_000, tables).passed


def test_nu2_parity_criterion(tables):
    assert nu2_parity_criterion_check(10_000, tables).passed


@pytest.mark.parametrize("A, B", THEOREM_PROGRESSIONS)
def test_nu1_odd_order_primes(tables, A, B):
    assert nu1_odd_order_check(A, B, 20_000, tables).passed


@pytest.mark.parametrize("A, B", [(16, 14), (36, 30)])
def test_divisor_facts(tables, A, B):
    reports = divisor_facts_check(A, B, 20_000, tables)
    assert [r.check_id.rsplit("-", 2)[0] for r in reports] == [
        "sigma1-mod8", "d-half-square", "half-convolution-mod4", "no-odd-pairs",
    ]
    assert all(r.passed for r in reports)


def test_report_from_failures():
    assert report_from_failures("x", "", 10, []).passed
    failed = report_from_failures("x", "", 10, [7, 9], describe=lambda n: f"n={n}")
    assert failed.status == "fail"
    assert failed.counterexample == "n=7"
    assert failed.details == {"failures": 2}


def test_timed_call_measures_each_call():
    single = timed_call(report_from_failures, "x", "", 10, [])
    assert single[0].elapsed_ms is not None and single[0].elapsed_ms >= 0

    def joint(bound):
        return [CheckReport("a", "", bound, "pass"), CheckReport("b", "", bound, "pass")]

    first, second = timed_call(joint, 5)
    assert first.elapsed_ms is not None
    assert second.elapsed_ms is None

    measured = CheckReport("c", "", 5, "pass", elapsed_ms=123.0)
    assert timed_call(lambda: [measured])[0].elapsed_ms == 123.0


@pytest.mark.parametrize("A, B", THEOREM_PROGRESSIONS)
def test_acceptance_bounds(A, B):
    nu2 = build_accessor("nu2", 50_000, 4)
    series = build_accessor("overpartition", 50_000, 16)
    assert verify_progression(nu2, A, B, 4, 50_000).passed
    assert verify_progression(series, A, B, 16, 50_000).passed
    nu3 = build_accessor("nu3", 20_000, 2)
    assert verify_progression(nu3, A, B, 2, 20_000).passed
