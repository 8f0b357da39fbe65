# backend/app/qseries/eta.py
"""
Fatores eta f_i = prod_{k>=1} (1 - q^{ik}) e quocientes eta.

f_i vem do teorema dos numeros pentagonais:
  f_1 = sum_{k in Z} (-1)^k q^{k(3k-1)/2}
e f_i e a mesma serie com expoentes multiplicados por i.
"""

from __future__ import annotations

from dataclasses import dataclass, field
from functools import lru_cache
import logging
from typing import Mapping

import numpy as np

from app.errors import DomainError
from app.qseries.series import Series, series_invert, series_mul, series_pow

logger = logging.getLogger(__name__)


@lru_cache(maxsize=256)
def eta_factor(i: int, trunc: int, modulus: int) -> Series:
    """Expansao truncada de f_i mod `modulus`."""
    if i < 1:
        raise DomainError(f"escala do fator eta deve ser >= 1 (recebido {i})")
    coeffs = np.zeros(trunc, dtype=np.int64)
    k = 0
    while i * k * (3 * k - 1) // 2 < trunc:
        sign = 1 if k % 2 == 0 else modulus - 1
        for e in {i * k * (3 * k - 1) // 2, i * k * (3 * k + 1) // 2}:
            if e < trunc:
                coeffs[e] = sign
        k += 1
    return Series(modulus, coeffs)


@dataclass(frozen=True)
class EtaQuotientSpec:
    """q^leading_power * prod f_i^{e_i}; escalas repetidas sao somadas."""

    leading_power: int = 0
    factors: tuple[tuple[int, int], ...] = field(default_factory=tuple)

    def __post_init__(self) -> None:
        if self.leading_power < 0:
            raise DomainError(f"leading_power deve ser >= 0 (recebido {self.leading_power})")
        merged: dict[int, int] = {}
        for scale, exponent in self.factors:
            if scale < 1:
                raise DomainError(f"escala do fator eta deve ser >= 1 (recebido {scale})")
            merged[scale] = merged.get(scale, 0) + exponent
        normalized = tuple(sorted((s, e) for s, e in merged.items() if e != 0))
        object.__setattr__(self, "factors", normalized)

    @classmethod
    def of(cls, exponents: Mapping[int, int], leading_power: int = 0) -> "EtaQuotientSpec":
        return cls(leading_power=leading_power, factors=tuple(exponents.items()))


def expand_eta_quotient(spec: EtaQuotientSpec, trunc: int, modulus: int) -> Series:
    """Expande o quociente eta ate q^(trunc-1)."""
    inner = trunc - spec.leading_power
    if inner <= 0:
        logger.warning(
            "trunc=%s <= leading_power=%s: quociente sem suporte visivel",
            trunc,
            spec.leading_power,
        )
        return Series.zero(trunc, modulus)

    numerator = Series.one(inner, modulus)
    denominator = Series.one(inner, modulus)
    for scale, exponent in spec.factors:
        power = series_pow(eta_factor(scale, inner, modulus), abs(exponent))
        if exponent > 0:
            numerator = series_mul(numerator, power)
        else:
            denominator = series_mul(denominator, power)

    body = series_mul(numerator, series_invert(denominator))
    coeffs = np.zeros(trunc, dtype=np.int64)
    coeffs[spec.leading_power :] = body.coeffs
    return Series(modulus, coeffs)


def theta_residue_series(M: int, eps: int, trunc: int) -> Series:
    """sum q^{j^2} mod 2 sobre j >= 1 com j == +/-eps (mod M)."""
    if not 0 < eps < M:
        raise DomainError(f"eps deve estar em (0, {M}) (recebido {eps})")
    classes = {eps % M, (M - eps) % M}
    coeffs = np.zeros(trunc, dtype=np.int64)
    j = 1
    while j * j < trunc:
        if j % M in classes:
            coeffs[j * j] = 1
        j += 1
    return Series(2, coeffs)
