# backend/app/congruence/representations.py
"""
Contagem de representacoes n = x^2 + p*y^2.

Conta triplas (x, p, y) com x >= 1, p primo, y >= 1, s_p(y) com a paridade
pedida e p, y nas classes de residuo informadas. Ambas as parcelas sao
positivas, entao cada tripla corresponde a um par {x^2, p*y^2} da soma
sum_k d(k) d(n-k).
"""

from __future__ import annotations

from dataclasses import dataclass
from math import isqrt
from typing import Optional

import numpy as np
from sympy import isprime, primerange

from app.arith.divisors import DivisorTables
from app.errors import DomainError

# Classes de p e y^2 (mod 36) que combinam com x^2 para somar 30 (mod 36)
SECTION36_PRIME_RESIDUES = frozenset({2, 5, 17, 29})
SECTION36_Y_RESIDUES = frozenset(y for y in range(36) if y % 2 and y % 3)


@dataclass(frozen=True)
class RepresentationQuery:
    n: int
    M: int = 1
    p_residues: Optional[frozenset[int]] = None
    y_residues: Optional[frozenset[int]] = None
    # 0 = s_p(y) par, 1 = impar, None = qualquer
    parity: Optional[int] = 0

    def __post_init__(self) -> None:
        if self.n < 1:
            raise DomainError(f"n deve ser >= 1 (recebido {self.n})")
        if self.M < 1:
            raise DomainError(f"M deve ser >= 1 (recebido {self.M})")
        for residues in (self.p_residues, self.y_residues):
            if residues is not None and not all(0 <= r < self.M for r in residues):
                raise DomainError(f"residuos fora de [0, {self.M}): {sorted(residues)}")
        if self.parity not in (0, 1, None):
            raise DomainError(f"paridade invalida: {self.parity}")


def section36_query(n: int) -> RepresentationQuery:
    """Restricoes da tabela mod 36: p em {2, 5, 17, 29}, y primo com 6."""
    return RepresentationQuery(
        n=n,
        M=36,
        p_residues=SECTION36_PRIME_RESIDUES,
        y_residues=SECTION36_Y_RESIDUES,
        parity=0,
    )


def _valuations(primes: np.ndarray, y: int) -> np.ndarray:
    """s_p(y) para cada p do vetor."""
    out = np.zeros(primes.size, dtype=np.int64)
    rest = np.full(primes.size, y, dtype=np.int64)
    mask = rest % primes == 0
    while mask.any():
        out += mask
        rest = np.where(mask, rest // primes, rest)
        mask = rest % primes == 0
    return out


def rep_count(q: RepresentationQuery, tables: Optional[DivisorTables] = None) -> int:
    n = q.n
    if tables is not None and tables.bound >= n - 1:
        all_primes = tables.primes_upto(n - 1)
    else:
        all_primes = np.array(list(primerange(2, n)), dtype=np.int64)
    if q.p_residues is not None:
        all_primes = all_primes[np.isin(all_primes % q.M, sorted(q.p_residues))]

    count = 0
    y = 1
    while 2 * y * y < n:
        if q.y_residues is None or y % q.M in q.y_residues:
            primes = all_primes[all_primes * y * y < n]
            if primes.size:
                rest = n - primes * y * y
                roots = np.sqrt(rest).astype(np.int64)
                roots += (roots + 1) ** 2 <= rest
                roots -= roots**2 > rest
                hit = roots * roots == rest
                if q.parity is not None:
                    hit &= _valuations(primes, y) % 2 == q.parity
                count += int(np.count_nonzero(hit))
        y += 1
    return count


def section36_parity(n: int, tables: Optional[DivisorTables] = None) -> int:
    """Paridade esperada do coeficiente de R(q) em n (0 fora de 36j+30)."""
    if n % 36 != 30:
        return 0
    return rep_count(section36_query(n), tables) % 2


def brute_rep_count(q: RepresentationQuery) -> int:
    """Oraculo por varredura direta de x e y (sem vetorizacao)."""
    count = 0
    for x in range(1, isqrt(q.n - 1) + 1):
        rest = q.n - x * x
        for y in range(1, isqrt(rest // 2) + 1):
            if rest % (y * y):
                continue
            p = rest // (y * y)
            if not isprime(p):
                continue
            if q.p_residues is not None and p % q.M not in q.p_residues:
                continue
            if q.y_residues is not None and y % q.M not in q.y_residues:
                continue
            if q.parity is not None:
                e, t = 0, y
                while t % p == 0:
                    t //= p
                    e += 1
                if e % 2 != q.parity:
                    continue
            count += 1
    return count
