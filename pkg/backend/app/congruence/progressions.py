# backend/app/congruence/progressions.py
"""
Verificacao de congruencias em progressoes aritmeticas f(An+B) == 0 (mod m).

Termos considerados: n = A*j + B com n >= 1 (para B = 0 comeca em A).
Tambem concentra os fatos auxiliares usados nas demonstracoes:
criterios de paridade de nu_2, nu_1 == 0 (mod 8), teorema de Kim mod 8.
"""

from __future__ import annotations

from dataclasses import dataclass, field
from math import isqrt
import time
from typing import Optional

import numpy as np

from app.arith.divisors import DivisorTables, build_divisor_tables
from app.arith.factor import odd_order_prime_count
from app.arith.squares import check_d_half_square
from app.congruence.accessors import SequenceAccessor
from app.congruence.checks import CheckReport, report_from_failures
from app.errors import DomainError
from app.partitions.formulas import nu2_table_formula
from app.partitions.overpartitions import overpartition_table

THEOREM_PROGRESSIONS: tuple[tuple[int, int], ...] = ((36, 30), (72, 42), (196, 70), (252, 114))


@dataclass
class ProgressionReport:
    target: str
    A: int
    B: int
    modulus: int
    checked_bound: int
    counterexample: Optional[tuple[int, int]] = None
    terms: int = 0
    backend: str = ""
    elapsed_ms: float = field(default=0.0, compare=False)

    def __post_init__(self) -> None:
        if self.counterexample is not None:
            n, value = self.counterexample
            if n % self.A != self.B or n > self.checked_bound or value % self.modulus == 0:
                raise DomainError(f"contraexemplo inconsistente: {self.counterexample}")

    @property
    def status(self) -> str:
        return "pass" if self.counterexample is None else "counterexample"

    @property
    def passed(self) -> bool:
        return self.counterexample is None

    @property
    def check_id(self) -> str:
        return f"{self.target}-{self.A}-{self.B}-mod{self.modulus}"

    def to_check(self) -> CheckReport:
        counter = None
        if self.counterexample is not None:
            n, value = self.counterexample
            counter = f"n={n} value={value}"
        return CheckReport(
            check_id=self.check_id,
            params=f"A={self.A};B={self.B};modulus={self.modulus};backend={self.backend}",
            bound=self.checked_bound,
            status="pass" if self.passed else "fail",
            counterexample=counter,
            elapsed_ms=self.elapsed_ms,
        )


def progression_terms(A: int, B: int, bound: int) -> np.ndarray:
    if A < 1:
        raise DomainError(f"A deve ser >= 1 (recebido {A})")
    if not 0 <= B < A:
        raise DomainError(f"B deve estar em [0, {A}) (recebido {B})")
    start = B if B > 0 else A
    return np.arange(start, bound + 1, A, dtype=np.int64)


def verify_progression(
    values: SequenceAccessor,
    A: int,
    B: int,
    modulus: int,
    bound: int,
) -> ProgressionReport:
    """Pass se values(n) == 0 (mod modulus) para todo n == B (mod A), n <= bound."""
    started = time.perf_counter()
    ns = progression_terms(A, B, bound)
    if values.bound < bound:
        raise DomainError(f"acessor {values.name} so vai ate {values.bound} (pedido {bound})")
    if modulus < 1:
        raise DomainError(f"modulo deve ser >= 1 (recebido {modulus})")

    terms = values.values[ns]
    bad = np.flatnonzero(terms % modulus)
    counterexample = None
    if bad.size:
        first = int(bad[0])
        counterexample = (int(ns[first]), int(terms[first]))

    return ProgressionReport(
        target=values.name,
        A=A,
        B=B,
        modulus=modulus,
        checked_bound=bound,
        counterexample=counterexample,
        terms=int(ns.size),
        backend=values.backend,
        elapsed_ms=(time.perf_counter() - started) * 1000,
    )


def _square_masks(bound: int) -> tuple[np.ndarray, np.ndarray]:
    """(n e quadrado, n e o dobro de um quadrado) para n = 0..bound."""
    square = np.zeros(bound + 1, dtype=bool)
    twice = np.zeros(bound + 1, dtype=bool)
    roots = np.arange(isqrt(bound) + 1)
    square[roots * roots] = True
    halves = roots[2 * roots * roots <= bound]
    twice[2 * halves * halves] = True
    return square, twice


def kim_mod8_check(bound: int) -> CheckReport:
    """p-barra(n) == 0 (mod 8) para n que nao e quadrado nem dobro de quadrado."""
    series = overpartition_table(bound, 8)
    square, twice = _square_masks(bound)
    eligible = ~(square | twice)
    eligible[0] = False
    failures = [int(n) for n in np.flatnonzero(eligible & (series.coeffs != 0))]
    return report_from_failures(
        "kim-mod8",
        "modulus=8",
        bound,
        failures,
        describe=lambda n: f"n={n} value={series[n]}",
    )


def kim_parity_equivalence(bound: int, tables: Optional[DivisorTables] = None) -> CheckReport:
    """nu_1(n)/2 == nu_2(n) (mod 2) fora dos quadrados e dobros de quadrados."""
    tables = tables if tables is not None and tables.bound >= bound else build_divisor_tables(bound)
    nu2 = nu2_table_formula(tables)[: bound + 1]
    d = tables.d[: bound + 1]
    square, twice = _square_masks(bound)
    eligible = ~(square | twice)
    eligible[0] = False
    failures = [int(n) for n in np.flatnonzero(eligible & ((d // 2 - nu2) % 2 != 0))]
    return report_from_failures(
        "kim-parity",
        "nu1/2 == nu2 (mod 2)",
        bound,
        failures,
        describe=lambda n: f"n={n} d={int(d[n])} nu2={int(nu2[n])}",
    )


def nu2_parity_criterion_check(bound: int, tables: Optional[DivisorTables] = None) -> CheckReport:
    """nu_2(n) par se n == 2 (mod 4) ou se >= 2 primos aparecem com expoente impar."""
    tables = tables if tables is not None and tables.bound >= bound else build_divisor_tables(bound)
    nu2 = nu2_table_formula(tables)
    failures = [
        n
        for n in range(1, bound + 1)
        if nu2[n] % 2 and (n % 4 == 2 or odd_order_prime_count(n) >= 2)
    ]
    return report_from_failures(
        "nu2-parity-criterion",
        "n%4==2 or odd-order primes>=2",
        bound,
        failures,
        describe=lambda n: f"n={n} nu2={int(nu2[n])}",
    )


def nu1_odd_order_check(A: int, B: int, bound: int, tables: Optional[DivisorTables] = None) -> CheckReport:
    """Cada termo tem >= 3 primos com expoente impar, logo d(n) == 0 (mod 8)."""
    tables = tables if tables is not None and tables.bound >= bound else build_divisor_tables(bound)
    failures = []
    for n in progression_terms(A, B, bound):
        n = int(n)
        if odd_order_prime_count(n) < 3 or tables.d_of(n) % 8:
            failures.append(n)
    return report_from_failures(
        f"nu1-odd-order-{A}-{B}",
        f"A={A};B={B};modulus=8",
        bound,
        failures,
        describe=lambda n: f"n={n} d={tables.d_of(n)} odd_primes={odd_order_prime_count(n)}",
    )


def divisor_facts_check(A: int, B: int, bound: int, tables: Optional[DivisorTables] = None) -> list[CheckReport]:
    """Fatos sobre d e sigma usados na reducao de nu_2 para pares x^2 + p y^2.

    - sigma_1(n) == 0 (mod 8)
    - d(n) == d(n/2)^2 (mod 8)
    - sum_{k=1}^{(n-2)/2} d(k) d(n-k) == 0 (mod 4)
    - nenhum k <= n/2 com d(k) d(n-k) impar
    """
    tables = tables if tables is not None and tables.bound >= bound else build_divisor_tables(bound)
    d = tables.d
    sigma_bad, half_bad, conv_bad, odd_bad = [], [], [], []
    for n in progression_terms(A, B, bound):
        n = int(n)
        if tables.sigma1_of(n) % 8:
            sigma_bad.append(n)
        if n % 2 == 0 and not check_d_half_square(n, tables):
            half_bad.append(n)
        half = n // 2
        left = d[1:half + 1]
        right = d[n - 1 : n - half - 1 : -1]
        products = left * right
        if n % 2 == 0 and int(products[: half - 1].sum()) % 4:
            conv_bad.append(n)
        if (products % 2).any():
            odd_bad.append(n)

    params = f"A={A};B={B}"
    return [
        report_from_failures(f"sigma1-mod8-{A}-{B}", params, bound, sigma_bad),
        report_from_failures(f"d-half-square-{A}-{B}", params, bound, half_bad),
        report_from_failures(f"half-convolution-mod4-{A}-{B}", params, bound, conv_bad),
        report_from_failures(f"no-odd-pairs-{A}-{B}", params, bound, odd_bad),
    ]
