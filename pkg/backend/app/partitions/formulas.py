# backend/app/partitions/formulas.py
"""
Formulas fechadas para nu_2 e nu_3 em termos de d, sigma_1 e sigma_2.

  2 nu_2(n) = sum_{k=1}^{n-1} d(k) d(n-k) - sigma_1(n) + d(n)
  6 nu_3(n) = 2 d(n) - 3 sigma_1(n) + sigma_2(n) - 3 (d*sigma_1)(n)
              + 3 (d*d)(n) + (d*d*d)(n)

onde (f*g)(n) = sum_{k=1}^{n-1} f(k) g(n-k). Acumula-se o multiplo inteiro
(2 nu_2, 6 nu_3) e a divisibilidade e conferida antes de dividir.
"""

from __future__ import annotations

import numpy as np

from app.arith.divisors import DivisorTables
from app.errors import ConsistencyError, DomainError
from app.qseries.kronecker import convolve_exact


def _check_n(n: int, tables: DivisorTables) -> None:
    if not 1 <= n <= tables.bound:
        raise DomainError(f"n={n} fora das tabelas (1..{tables.bound})")


def _conv_at(f: np.ndarray, g: np.ndarray, n: int) -> int:
    # f, g indexados por n, com indice 0 nulo
    return int(np.dot(f[1:n], g[n - 1 : 0 : -1])) if n > 1 else 0


def nu2_formula(n: int, tables: DivisorTables) -> int:
    _check_n(n, tables)
    d = tables.d
    twice = _conv_at(d, d, n) - tables.sigma1_of(n) + tables.d_of(n)
    if twice % 2:
        raise ConsistencyError(f"2*nu_2({n}) = {twice} e impar")
    return twice // 2


def nu3_formula(n: int, tables: DivisorTables) -> int:
    _check_n(n, tables)
    d = tables.d[: n + 1]
    dd = convolve_exact(d, d, n + 1)
    six = (
        2 * tables.d_of(n)
        - 3 * tables.sigma1_of(n)
        + tables.sigma2_of(n)
        - 3 * _conv_at(d, tables.sigma1, n)
        + 3 * int(dd[n])
        + _conv_at(d, dd, n)
    )
    if six % 6:
        raise ConsistencyError(f"6*nu_3({n}) = {six} nao e multiplo de 6")
    return six // 6


def nu2_table_formula(tables: DivisorTables) -> np.ndarray:
    """nu_2(n) para n = 0..bound (posicao 0 vale 0)."""
    d = tables.d
    twice = convolve_exact(d, d, tables.bound + 1) - tables.sigma1 + d
    if (twice % 2).any():
        bad = int(np.flatnonzero(twice % 2)[0])
        raise ConsistencyError(f"2*nu_2({bad}) e impar")
    return twice // 2


def nu3_table_formula(tables: DivisorTables) -> np.ndarray:
    """nu_3(n) para n = 0..bound, vetorizado sobre a tabela toda."""
    size = tables.bound + 1
    d = tables.d
    dd = convolve_exact(d, d, size)
    six = (
        2 * d
        - 3 * tables.sigma1
        + tables.sigma2
        - 3 * convolve_exact(d, tables.sigma1, size)
        + 3 * dd
        + convolve_exact(d, dd, size)
    )
    if (six % 6).any():
        bad = int(np.flatnonzero(six % 6)[0])
        raise ConsistencyError(f"6*nu_3({bad}) nao e multiplo de 6")
    return six // 6
