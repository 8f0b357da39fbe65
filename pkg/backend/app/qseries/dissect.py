# backend/app/qseries/dissect.py
"""
Dissecao por classes de expoentes e substituicao q -> q^c.
"""

from __future__ import annotations

from enum import Enum

import numpy as np

from app.errors import DomainError
from app.qseries.series import Series


class ExtractMode(str, Enum):
    KEEP = "keep"          # mantem expoentes An+B, zera o resto
    COMPRESS = "compress"  # reindexa An+B -> n


def extract_progression(a: Series, A: int, B: int, mode: ExtractMode | str = ExtractMode.KEEP) -> Series:
    """Parte de `a` nos expoentes An+B.

    KEEP mantem o trunc e zera os demais expoentes. COMPRESS devolve
    sum_n a[An+B] q^n e exige B < a.trunc: sem nenhum expoente An+B dentro do
    truncamento nao ha serie para devolver. Erros: B fora de [0, A) e, em
    COMPRESS, B >= a.trunc (DomainError).
    """
    if A < 1:
        raise DomainError(f"A deve ser >= 1 (recebido {A})")
    if not 0 <= B < A:
        raise DomainError(f"B deve estar em [0, {A}) (recebido {B})")
    mode = ExtractMode(mode)

    if mode is ExtractMode.COMPRESS:
        if B >= a.trunc:
            raise DomainError(f"B={B} fora do truncamento {a.trunc}")
        return Series(a.modulus, a.coeffs[B::A].copy())

    coeffs = np.zeros(a.trunc, dtype=np.int64)
    coeffs[B::A] = a.coeffs[B::A]
    return Series(a.modulus, coeffs)


def substitute_power(a: Series, c: int) -> Series:
    """a(q^c) com o mesmo trunc."""
    if c < 1:
        raise DomainError(f"c deve ser >= 1 (recebido {c})")
    coeffs = np.zeros(a.trunc, dtype=np.int64)
    targets = coeffs[::c]
    targets[:] = a.coeffs[: targets.size]
    return Series(a.modulus, coeffs)
