# backend/tests/test_partitions.py
from __future__ import annotations

import numpy as np
import pytest

from app.config import settings
from app.errors import DomainError, ResourceLimitError
from app.partitions.formulas import nu2_formula, nu2_table_formula, nu3_formula, nu3_table_formula
from app.partitions.nu import NuTable, max_feasible_k, nu_bruteforce, nu_table_dp
from app.partitions.oracle import nu_agreement, overpartition_identity, run_oracle_suite
from app.partitions.overpartitions import overpartition_from_nu, overpartition_table, required_kmax

OVERPARTITIONS = [1, 2, 4, 8, 14, 24, 40, 64, 100, 154, 232, 344, 504, 728]


def test_bruteforce_small_values():
    assert nu_bruteforce(5, 2) == 5
    assert nu_bruteforce(6, 2) == 6
    assert nu_bruteforce(6, 3) == 1
    assert nu_bruteforce(6, 1) == 4
    assert nu_bruteforce(6, 4) == 0


def test_bruteforce_limits():
    with pytest.raises(ResourceLimitError):
        nu_bruteforce(61, 2, cap=60)
    with pytest.raises(DomainError):
        nu_bruteforce(0, 1)


def test_max_feasible_k():
    assert [max_feasible_k(n) for n in (1, 2, 3, 5, 6, 10)] == [1, 1, 2, 2, 3, 4]


def test_dp_matches_bruteforce(nu_exact):
    for n in range(1, 31):
        for k in (1, 2, 3):
            assert nu_exact.value(n, k) == nu_bruteforce(n, k, cap=30)


def test_dp_first_column_is_divisor_count(nu_exact, small_tables):
    assert [nu_exact.value(n, 1) for n in range(1, 121)] == [small_tables.d_of(n) for n in range(1, 121)]


def test_dp_modular_matches_exact(nu_exact):
    reduced = nu_table_dp(120, 3, modulus=4)
    for k in (1, 2, 3):
        assert [int(v) for v in reduced.column(k)] == [int(v) % 4 for v in nu_exact.column(k)]


def test_dp_limits(monkeypatch):
    with pytest.raises(ResourceLimitError):
        nu_table_dp(401, 2)
    with pytest.raises(DomainError):
        nu_table_dp(10, 2, modulus=1)
    with pytest.raises(DomainError):
        nu_table_dp(10, 0)
    monkeypatch.setattr(settings, "max_dp_cells", 100)
    with pytest.raises(ResourceLimitError):
        nu_table_dp(100, 2, modulus=2)


def test_nu_table_accessors(nu_exact):
    with pytest.raises(DomainError):
        nu_exact.value(0, 1)
    with pytest.raises(DomainError):
        nu_exact.value(5, 4)
    records = nu_exact.records()
    assert len(records) == 120 * 3
    assert records[0] == {"n": 1, "k": 1, "value": 1}


def test_formula_values(small_tables):
    assert nu2_formula(5, small_tables) == 5
    assert nu3_formula(6, small_tables) == 1
    assert nu3_formula(30, small_tables) == 1144
    with pytest.raises(DomainError):
        nu2_formula(0, small_tables)
    with pytest.raises(DomainError):
        nu3_formula(small_tables.bound + 1, small_tables)


def test_formula_tables_match_dp(nu_exact, small_tables):
    nu2 = nu2_table_formula(small_tables)
    nu3 = nu3_table_formula(small_tables)
    for n in range(1, 121):
        assert int(nu2[n]) == nu_exact.value(n, 2) == nu2_formula(n, small_tables)
        assert int(nu3[n]) == nu_exact.value(n, 3)


def test_overpartition_table_values():
    series = overpartition_table(13, 2**31 - 1)
    assert series.coeffs.tolist() == OVERPARTITIONS
    assert series[3] == 8


def test_required_kmax():
    assert required_kmax(500, 2**20) == 19
    assert required_kmax(10, None) == 4
    assert required_kmax(10, 3) == 4


def test_overpartition_from_nu(nu_exact):
    for n in range(1, 10):
        assert overpartition_from_nu(n, nu_exact) == OVERPARTITIONS[n]
    with pytest.raises(DomainError):
        overpartition_from_nu(10, nu_exact)


def test_overpartition_identity_mod_2_20():
    result = overpartition_identity(500, 2**20)
    assert result.passed, result.mismatches[:3]


def test_oracle_suite_passes():
    results = run_oracle_suite(bruteforce_cap=25)
    assert [r.check_id for r in results] == ["oracle-nu2", "oracle-nu3", "oracle-overpartition"]
    assert all(r.passed for r in results)


def test_oracle_detects_corrupted_table():
    good = nu_table_dp(60, 2)
    values = good.values.copy()
    values[2, 17] += 1
    corrupted = NuTable(bound=60, kmax=2, modulus=None, values=values)
    result = nu_agreement(2, 60, 20, dp_table=corrupted)
    assert not result.passed
    assert result.mismatches[0]["n"] == 17
    assert result.mismatches[0]["dp"] == result.mismatches[0]["formula"] + 1


def test_oracle_acceptance_bounds():
    results = run_oracle_suite(bruteforce_cap=60, nu2_bound=120, nu3_bound=80)
    assert all(r.passed for r in results)


def test_oracle_suite_rejects_cap_above_settings():
    with pytest.raises(ResourceLimitError):
        run_oracle_suite(bruteforce_cap=settings.bruteforce_cap + 1)
