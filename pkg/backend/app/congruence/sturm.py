# backend/app/congruence/sturm.py
"""
Limite de Sturm: ceil((k/12) * N * prod_{p|N} (p+1)/p) * fator de indice.

Peso, nivel e fator sao constantes dadas (nao sao recalculados aqui).
"""

from __future__ import annotations

from dataclasses import dataclass
from fractions import Fraction
from math import ceil

from app.arith.factor import factorize
from app.errors import DomainError

# Multiplo do limite de Gamma_0 usado em cada progressao (A -> fator)
STURM_INDEX_FACTORS: dict[int, int] = {36: 3, 72: 6, 196: 21, 252: 9}


@dataclass(frozen=True)
class SturmInput:
    weight: int
    level: int
    index_factor: int = 1

    def __post_init__(self) -> None:
        if self.weight < 1 or self.level < 1 or self.index_factor < 1:
            raise DomainError(
                f"peso, nivel e fator devem ser positivos "
                f"({self.weight}, {self.level}, {self.index_factor})"
            )


def sturm_bound(s: SturmInput) -> int:
    value = Fraction(s.weight, 12) * s.level
    for p in factorize(s.level).primes:
        value *= Fraction(p + 1, p)
    return ceil(value) * s.index_factor
