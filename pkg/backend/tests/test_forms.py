# backend/tests/test_forms.py
"""Representacoes x^2 + p y^2, limites de Sturm e as series R(q), T(q)."""

from __future__ import annotations

import pytest

from app.congruence.representations import (
    RepresentationQuery,
    brute_rep_count,
    rep_count,
    section36_parity,
    section36_query,
)
from app.congruence.sigma_forms import (
    all_even_report,
    build_R36,
    build_sigma_dissection,
    build_T16,
    f_g_theta_parity_check,
    g_family_checks,
    r36_checks,
)
from app.congruence.sturm import STURM_INDEX_FACTORS, SturmInput, sturm_bound
from app.errors import DomainError
from app.orchestration.run_sturm import progression_sturm_bounds


def test_section36_rep_counts(small_tables):
    assert rep_count(section36_query(30), small_tables) == 2
    assert rep_count(section36_query(66), small_tables) == 4
    assert section36_parity(31, small_tables) == 0


def test_rep_count_prime_family():
    five_mod_8 = dict(M=8, p_residues=frozenset({5}), parity=None)
    assert rep_count(RepresentationQuery(3, **five_mod_8)) == 0
    # 6 = 1 + 5 * 1
    assert rep_count(RepresentationQuery(6, **five_mod_8)) == 1


@pytest.mark.parametrize("n", range(1, 400, 7))
def test_rep_count_matches_bruteforce(small_tables, n):
    for query in (section36_query(n), RepresentationQuery(n, parity=None), RepresentationQuery(n, parity=1)):
        assert rep_count(query, small_tables) == brute_rep_count(query)


def test_representation_query_validation():
    with pytest.raises(DomainError):
        RepresentationQuery(0)
    with pytest.raises(DomainError):
        RepresentationQuery(10, M=8, p_residues=frozenset({9}))
    with pytest.raises(DomainError):
        RepresentationQuery(10, parity=2)


@pytest.mark.parametrize(
    "weight, level, factor, expected",
    [(4, 64, 1, 32), (4, 46656, 1, 31104), (4, 46656, 3, 93312)],
)
def test_sturm_bound(weight, level, factor, expected):
    assert sturm_bound(SturmInput(weight, level, factor)) == expected


def test_sturm_inputs():
    assert STURM_INDEX_FACTORS == {36: 3, 72: 6, 196: 21, 252: 9}
    with pytest.raises(DomainError):
        SturmInput(0, 64)


def test_sigma_dissection_halving_requires_even_values(small_tables):
    with pytest.raises(DomainError, match="impar"):
        build_sigma_dissection(2, 1, True, 1, 100, small_tables)
    with pytest.raises(DomainError):
        build_sigma_dissection(4, 4, False, 1, 100, small_tables)


def test_t16_is_even(tables):
    assert all_even_report("T16-even", build_T16(32, tables)).passed
    assert all_even_report("T16-even", build_T16(10_000, tables)).passed
    with pytest.raises(DomainError):
        build_T16(31)


def test_t16_parity_matches_representation_count(tables):
    T = build_T16(10_000, tables)
    assert rep_count(RepresentationQuery(30), tables) == 2
    assert T[30] == 0
    mismatches = [
        n for n in range(14, 10_000, 16) if T[n] != rep_count(RepresentationQuery(n, parity=0), tables) % 2
    ]
    assert mismatches == []


def test_f_and_g_match_theta_series(tables):
    assert f_g_theta_parity_check(10_000, tables).passed


def test_g_families(tables):
    assert all(r.passed for r in g_family_checks(10_000, tables))


def test_r36_parity_support_and_representations(tables):
    reports = r36_checks(10_000, 10_000, tables)
    assert [r.check_id for r in reports] == ["R36-even", "R36-support", "R36-rep-parity"]
    assert all(r.passed for r in reports), [r.counterexample for r in reports]


def test_r36_packed_and_generic_agree(small_tables):
    from app.qseries.series import series_mul

    packed = build_R36(200, small_tables)
    assert packed.modulus == 2
    F = build_sigma_dissection(36, 1, False, 1, 200, small_tables)
    G = build_sigma_dissection(36, 29, True, 1, 200, small_tables)
    assert series_mul(F, G) == series_mul(F, G, method="generic")


@pytest.mark.long
def test_r36_even_to_sturm_bound():
    reports = r36_checks(93_312, 10_000)
    assert all(r.passed for r in reports)


def test_progression_sturm_bounds():
    assert progression_sturm_bounds(4, 46656) == {36: 93312, 72: 186624, 196: 653184, 252: 279936}
