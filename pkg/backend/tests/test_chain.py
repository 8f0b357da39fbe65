# backend/tests/test_chain.py
from __future__ import annotations

import pytest

from app.congruence.nu3_reduction import (
    nu3_reduction_check,
    nu3_reduction_range,
    reduction_preconditions,
    reduction_terms,
)
from app.congruence.overpartition_chain import (
    EXACT_MODULI,
    check_overpartition_chain,
    lemma_2_dissection,
    lemma_3_dissection,
    lemma_checks,
    two_adic_checks,
    two_adic_lemma_holds,
)
from app.errors import DomainError
from app.partitions.nu import nu_table_dp


@pytest.mark.parametrize("modulus", EXACT_MODULI)
def test_lemma_dissections(modulus):
    assert lemma_3_dissection(2000, modulus).passed
    assert lemma_2_dissection(2000, modulus).passed


def test_lemma_checks_cover_both_moduli():
    reports = lemma_checks(300)
    assert len(reports) == 4
    assert all(r.passed for r in reports)


def test_two_adic_lemma():
    assert two_adic_checks(500).passed
    assert two_adic_lemma_holds(1, 1, 0, 200)
    with pytest.raises(DomainError):
        two_adic_lemma_holds(1, 2, 2, 50)


def test_overpartition_chain():
    reports = check_overpartition_chain(300)
    ids = [r.check_id for r in reports]
    assert ids == [
        "op-chain-6n",
        "op-chain-2mod3",
        "op-chain-2mod3-f6^7-refuted",
        "op-chain-1mod3",
        "op-36n+30",
        "op-36n+6",
        "op-pentagonal-mod7",
        "op-252n+114",
    ]
    failing = {r.check_id: r.counterexample for r in reports if not r.passed}
    assert failing == {}


def test_overpartition_chain_to_2000():
    assert all(r.passed for r in check_overpartition_chain(2000))


def test_reduction_terms_known_values(small_tables):
    t30 = reduction_terms(30, small_tables)
    assert (t30.X, t30.Y, t30.Z) == (2390, 96, 9)
    assert t30.value == 0
    t66 = reduction_terms(66, small_tables)
    assert (t66.X, t66.Y, t66.Z) == (15012, 278, 15)


def test_reduction_single_values(small_tables):
    nu = nu_table_dp(200, 3, 2**20)
    assert nu3_reduction_check(30, small_tables, nu)
    assert nu.value(30, 3) == 1144
    facts = reduction_preconditions(30, small_tables, nu.value(30, 2))
    assert all(facts.values())
    with pytest.raises(DomainError):
        nu3_reduction_check(31, small_tables, nu)


def test_reduction_range(tables):
    reports = nu3_reduction_range(5_000, tables)
    assert [r.check_id for r in reports] == [
        "nu3-reduction",
        "d-plus-sigma2-mod12",
        "nu3-reduction-preconditions",
    ]
    assert all(r.passed for r in reports)
