# backend/app/qseries/series.py
"""
Series de potencias truncadas sobre Z/m.

Regras:
- coeficientes guardados para expoentes 0..trunc-1, sempre em [0, m)
- operacoes binarias truncam no operando mais curto (sem extensao implicita)
- valores imutaveis: toda operacao devolve uma Series nova
- 2 <= m <= 2^31, para que produtos de dois residuos caibam em int64
"""

from __future__ import annotations

from dataclasses import dataclass
from typing import Iterable, Literal

import numpy as np

from app.config import settings
from app.errors import DomainError, ResourceLimitError
from app.qseries import kronecker, packed

MulMethod = Literal["auto", "generic", "packed"]


@dataclass(frozen=True, eq=False)
class Series:
    modulus: int
    coeffs: np.ndarray

    def __post_init__(self) -> None:
        if not 2 <= self.modulus <= kronecker.MAX_MODULUS:
            raise DomainError(f"modulo fora de [2, 2^31]: {self.modulus}")
        if self.coeffs.ndim != 1 or self.coeffs.size == 0:
            raise DomainError("Series exige trunc >= 1")
        if self.coeffs.dtype != np.int64:
            raise DomainError("coeficientes devem ser int64 (use Series.from_values)")
        if self.coeffs.size > settings.max_series_trunc:
            raise ResourceLimitError(
                f"trunc={self.coeffs.size} excede CONGRUENCE_FORGE_MAX_SERIES_TRUNC"
            )
        if self.coeffs.min() < 0 or self.coeffs.max() >= self.modulus:
            raise DomainError("coeficientes fora de [0, modulus)")
        self.coeffs.setflags(write=False)

    @classmethod
    def from_values(cls, values: Iterable[int] | np.ndarray, modulus: int, trunc: int | None = None) -> "Series":
        """Reduz inteiros arbitrarios (inclusive negativos ou grandes) mod m."""
        if isinstance(values, np.ndarray) and values.dtype.kind in "iu":
            arr = np.mod(values.astype(np.int64), modulus)
        else:
            arr = np.array([int(v) % modulus for v in values], dtype=np.int64)
        if trunc is not None:
            out = np.zeros(trunc, dtype=np.int64)
            count = min(trunc, arr.size)
            out[:count] = arr[:count]
            arr = out
        return cls(modulus=modulus, coeffs=arr)

    @classmethod
    def zero(cls, trunc: int, modulus: int) -> "Series":
        return cls(modulus=modulus, coeffs=np.zeros(trunc, dtype=np.int64))

    @classmethod
    def one(cls, trunc: int, modulus: int) -> "Series":
        coeffs = np.zeros(trunc, dtype=np.int64)
        coeffs[0] = 1
        return cls(modulus=modulus, coeffs=coeffs)

    @classmethod
    def monomial(cls, power: int, trunc: int, modulus: int, coefficient: int = 1) -> "Series":
        coeffs = np.zeros(trunc, dtype=np.int64)
        if power < trunc:
            coeffs[power] = coefficient % modulus
        return cls(modulus=modulus, coeffs=coeffs)

    @property
    def trunc(self) -> int:
        return int(self.coeffs.size)

    def __getitem__(self, exponent: int) -> int:
        if not 0 <= exponent < self.trunc:
            raise DomainError(f"expoente {exponent} fora de [0, {self.trunc})")
        return int(self.coeffs[exponent])

    def __eq__(self, other: object) -> bool:
        if not isinstance(other, Series):
            return NotImplemented
        return self.modulus == other.modulus and np.array_equal(self.coeffs, other.coeffs)

    __hash__ = None  # type: ignore[assignment]

    def __repr__(self) -> str:
        head = ", ".join(str(int(c)) for c in self.coeffs[:8])
        return f"Series(modulus={self.modulus}, trunc={self.trunc}, coeffs=[{head}, ...])"

    def __add__(self, other: "Series") -> "Series":
        return series_add(self, other)

    def __sub__(self, other: "Series") -> "Series":
        return series_sub(self, other)

    def __neg__(self) -> "Series":
        return series_neg(self)

    def __mul__(self, other: "Series | int") -> "Series":
        if isinstance(other, (int, np.integer)):
            return series_scale(self, int(other))
        return series_mul(self, other)

    def __rmul__(self, other: int) -> "Series":
        return series_scale(self, int(other))

    def __pow__(self, exponent: int) -> "Series":
        return series_pow(self, exponent)

    def truncate(self, trunc: int) -> "Series":
        if trunc > self.trunc:
            raise DomainError(f"nao e possivel estender de {self.trunc} para {trunc}")
        return Series(self.modulus, self.coeffs[:trunc].copy())

    def shift(self, power: int) -> "Series":
        """q^power * a, mantendo trunc."""
        out = np.zeros(self.trunc, dtype=np.int64)
        if power < self.trunc:
            out[power:] = self.coeffs[: self.trunc - power]
        return Series(self.modulus, out)

    def support(self) -> np.ndarray:
        return np.flatnonzero(self.coeffs)

    def is_zero(self) -> bool:
        return not self.coeffs.any()

    def dump(self) -> str:
        """Linhas `expoente coeficiente` dos termos nao nulos, em ordem crescente."""
        return "".join(f"{int(e)} {int(self.coeffs[e])}\n" for e in self.support())


def _check_compatible(a: Series, b: Series) -> int:
    if a.modulus != b.modulus:
        raise DomainError(f"modulos diferentes: {a.modulus} e {b.modulus}")
    return min(a.trunc, b.trunc)


def series_add(a: Series, b: Series) -> Series:
    trunc = _check_compatible(a, b)
    return Series(a.modulus, (a.coeffs[:trunc] + b.coeffs[:trunc]) % a.modulus)


def series_sub(a: Series, b: Series) -> Series:
    trunc = _check_compatible(a, b)
    return Series(a.modulus, (a.coeffs[:trunc] - b.coeffs[:trunc]) % a.modulus)


def series_neg(a: Series) -> Series:
    return Series(a.modulus, (-a.coeffs) % a.modulus)


def series_scale(a: Series, factor: int) -> Series:
    return Series(a.modulus, (a.coeffs * (factor % a.modulus)) % a.modulus)


def _mul_arrays(a: np.ndarray, b: np.ndarray, trunc: int, modulus: int, method: MulMethod = "auto") -> np.ndarray:
    if modulus == 2 and method != "generic":
        return packed.clmul_truncated(a, b, trunc)
    if method == "packed":
        raise DomainError("caminho empacotado so existe para modulo 2")
    return kronecker.convolve_mod(a, b, trunc, modulus)


def series_mul(a: Series, b: Series, method: MulMethod = "auto") -> Series:
    """Produto de Cauchy truncado.

    method="generic" forca Kronecker/esparso mesmo mod 2 (usado para
    conferir o caminho empacotado).
    """
    trunc = _check_compatible(a, b)
    return Series(a.modulus, _mul_arrays(a.coeffs, b.coeffs, trunc, a.modulus, method))


def series_invert(a: Series) -> Series:
    """Inversa por iteracao de Newton: b <- b(2 - ab), dobrando a precisao."""
    m = a.modulus
    try:
        b0 = pow(int(a.coeffs[0]), -1, m)
    except ValueError as exc:
        raise DomainError(f"termo constante {int(a.coeffs[0])} nao e unidade mod {m}") from exc

    inverse = np.array([b0], dtype=np.int64)
    precision = 1
    while precision < a.trunc:
        precision = min(2 * precision, a.trunc)
        error = _mul_arrays(a.coeffs[:precision], inverse, precision, m)
        correction = (-error) % m
        correction[0] = (correction[0] + 2) % m
        inverse = _mul_arrays(inverse, correction, precision, m)
    return Series(m, inverse)


def series_pow(a: Series, exponent: int) -> Series:
    """Potencia inteira; expoente negativo inverte antes."""
    if exponent < 0:
        return series_pow(series_invert(a), -exponent)
    result = Series.one(a.trunc, a.modulus)
    base = a
    while exponent:
        if exponent & 1:
            result = series_mul(result, base)
        exponent >>= 1
        if exponent:
            base = series_mul(base, base)
    return result
