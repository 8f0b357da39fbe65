# backend/app/arith/divisors.py
"""
Tabelas de funcoes divisor via crivo (numpy).

Para cada j <= bound soma-se a contribuicao de j em todos os seus
multiplos: d += 1, sigma1 += j, sigma2 += j^2. Custo O(N log N).

As tabelas tem indice 0 reservado (d(0) nao existe) e ficam somente
leitura depois de construidas.
"""

from __future__ import annotations

from dataclasses import dataclass
import logging
import time

import numpy as np

from app.config import settings
from app.errors import DomainError, ResourceLimitError

logger = logging.getLogger(__name__)


@dataclass(frozen=True, eq=False)
class DivisorTables:
    """d(n), sigma_1(n), sigma_2(n) para 1 <= n <= bound."""

    bound: int
    d: np.ndarray
    sigma1: np.ndarray
    sigma2: np.ndarray

    def __post_init__(self) -> None:
        if self.bound < 1:
            raise DomainError(f"bound deve ser >= 1 (recebido {self.bound})")
        for name in ("d", "sigma1", "sigma2"):
            table = getattr(self, name)
            if table.shape != (self.bound + 1,):
                raise DomainError(f"tabela {name} com tamanho inconsistente")
            table.setflags(write=False)

    def _check(self, n: int) -> None:
        if n < 1:
            raise DomainError(f"funcoes divisor nao definidas para n={n}")
        if n > self.bound:
            raise DomainError(f"n={n} acima do bound da tabela ({self.bound})")

    def d_of(self, n: int) -> int:
        self._check(n)
        return int(self.d[n])

    def sigma1_of(self, n: int) -> int:
        self._check(n)
        return int(self.sigma1[n])

    def sigma2_of(self, n: int) -> int:
        self._check(n)
        return int(self.sigma2[n])

    @property
    def prime_mask(self) -> np.ndarray:
        """Mascara booleana de primos (d(p) = 2); indice 0 e 1 falsos."""
        return self.d == 2

    def primes_upto(self, limit: int) -> np.ndarray:
        limit = min(limit, self.bound)
        return np.flatnonzero(self.prime_mask[: limit + 1])


def build_divisor_tables(bound: int) -> DivisorTables:
    """Constroi as tabelas ate `bound` respeitando o limite configurado."""
    if bound < 1:
        raise DomainError(f"bound deve ser >= 1 (recebido {bound})")
    if bound > settings.max_table_bound:
        raise ResourceLimitError(
            f"bound={bound} excede CONGRUENCE_FORGE_MAX_TABLE_BOUND={settings.max_table_bound}"
        )

    started = time.perf_counter()
    d = np.zeros(bound + 1, dtype=np.int64)
    sigma1 = np.zeros(bound + 1, dtype=np.int64)
    sigma2 = np.zeros(bound + 1, dtype=np.int64)

    half = bound // 2
    for j in range(1, half + 1):
        d[j::j] += 1
        sigma1[j::j] += j
        sigma2[j::j] += j * j
    # j > bound/2 so divide apenas a si mesmo
    tail = np.arange(half + 1, bound + 1, dtype=np.int64)
    d[tail] += 1
    sigma1[tail] += tail
    sigma2[tail] += tail * tail

    logger.debug(
        "Tabelas de divisores ate %s em %.1f ms",
        bound,
        (time.perf_counter() - started) * 1000,
    )
    return DivisorTables(bound=bound, d=d, sigma1=sigma1, sigma2=sigma2)
