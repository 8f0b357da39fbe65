# backend/tests/test_arith.py
from __future__ import annotations

from math import isqrt

import numpy as np
import pytest
from sympy import divisor_count as sympy_divisor_count
from sympy import divisor_sigma as sympy_divisor_sigma
from sympy import factorint

from app.arith.divisors import build_divisor_tables
from app.arith.factor import (
    Factorization,
    divisor_count,
    divisor_sigma,
    factorize,
    odd_order_prime_count,
    prime_valuation,
)
from app.arith.squares import QuadraticForm, attainable_residues, check_d_half_square, is_sum_of_two_squares
from app.config import settings
from app.errors import DomainError, ResourceLimitError


def test_factorize_examples():
    assert factorize(360).factors == ((2, 3), (3, 2), (5, 1))
    assert factorize(1).factors == ()
    assert factorize(97).primes == (97,)
    assert factorize(2 * 7**3).exponent(7) == 3
    assert factorize(2 * 7**3).exponent(5) == 0


def test_factorize_matches_sympy():
    for n in range(1, 3000):
        assert dict(factorize(n).factors) == factorint(n)


def test_factorize_rejects_non_positive():
    with pytest.raises(DomainError):
        factorize(0)


def test_factorization_validates_its_factors():
    with pytest.raises(DomainError):
        Factorization(12, ((2, 2), (3, 2)))
    with pytest.raises(DomainError):
        Factorization(12, ((3, 1), (2, 2)))


def test_prime_valuation():
    assert prime_valuation(3, 54) == 3
    assert prime_valuation(5, 7) == 0
    with pytest.raises(DomainError):
        prime_valuation(4, 8)
    with pytest.raises(DomainError):
        prime_valuation(3, 0)


def test_odd_order_prime_count():
    assert odd_order_prime_count(30) == 3
    assert odd_order_prime_count(36) == 0
    assert odd_order_prime_count(12) == 1


def test_divisor_functions_per_entry():
    assert divisor_count(30) == 8
    assert divisor_sigma(30) == 72
    assert divisor_sigma(30, 2) == 1300


def test_divisor_tables_match_sympy(small_tables):
    for n in range(1, small_tables.bound + 1):
        assert small_tables.d_of(n) == sympy_divisor_count(n)
        assert small_tables.sigma1_of(n) == sympy_divisor_sigma(n, 1)
        assert small_tables.sigma2_of(n) == sympy_divisor_sigma(n, 2)


def test_divisor_tables_are_read_only(small_tables):
    with pytest.raises(ValueError):
        small_tables.d[1] = 5


def test_divisor_tables_bounds(small_tables):
    with pytest.raises(DomainError):
        small_tables.d_of(0)
    with pytest.raises(DomainError):
        small_tables.sigma1_of(small_tables.bound + 1)
    with pytest.raises(DomainError):
        build_divisor_tables(0)


def test_divisor_tables_respect_limit(monkeypatch):
    monkeypatch.setattr(settings, "max_table_bound", 100)
    with pytest.raises(ResourceLimitError):
        build_divisor_tables(101)


def test_primes_upto(small_tables):
    assert small_tables.primes_upto(30).tolist() == [2, 3, 5, 7, 11, 13, 17, 19, 23, 29]
    assert not small_tables.prime_mask[1]


def test_squares_mod_36():
    assert attainable_residues(36, QuadraticForm.SQUARE) == frozenset({0, 1, 4, 9, 13, 16, 25, 28})


@pytest.mark.parametrize("modulus, residue", [(36, 30), (16, 14), (4, 3), (8, 7)])
def test_progressions_avoid_sums_of_two_squares(modulus, residue):
    assert residue not in attainable_residues(modulus, "sum-of-two-squares")


def test_pentagonal_doubled_residues_mod_7():
    assert attainable_residues(7, QuadraticForm.PENTAGONAL_DOUBLED) == frozenset({0, 1, 4, 6})


def test_attainable_residues_errors():
    with pytest.raises(DomainError):
        attainable_residues(7, "cubes")
    with pytest.raises(DomainError):
        attainable_residues(0, QuadraticForm.SQUARE)


def test_is_sum_of_two_squares_matches_search():
    limit = 100_000
    roots = range(isqrt(limit) + 1)
    reached = {x * x + y * y for x in roots for y in roots if x <= y and x * x + y * y <= limit}
    wrong = [n for n in range(limit + 1) if is_sum_of_two_squares(n) != (n in reached)]
    assert wrong == []


def test_check_d_half_square(small_tables):
    assert check_d_half_square(2) is False
    assert check_d_half_square(30, small_tables) is True
    assert check_d_half_square(46) is True
    with pytest.raises(DomainError):
        check_d_half_square(15)
    with pytest.raises(DomainError):
        check_d_half_square(0)


def test_d_half_square_holds_on_both_progressions(tables):
    evens = [n for n in range(14, 20_001, 16)] + [n for n in range(30, 20_001, 36)]
    assert all(check_d_half_square(n, tables) for n in evens)
    assert np.all(tables.sigma1[np.array(evens)] % 8 == 0)
