# backend/app/congruence/accessors.py
"""
Acessores de sequencias para verify_progression.

Cada acessor guarda valores para n = 0..bound e indica o backend usado,
para que o mesmo teorema possa ser conferido por caminhos diferentes.
"""

from __future__ import annotations

from dataclasses import dataclass
from typing import Literal, Optional

import numpy as np

from app.arith.divisors import DivisorTables, build_divisor_tables
from app.errors import DomainError
from app.partitions.formulas import nu2_table_formula, nu3_table_formula
from app.partitions.nu import nu_table_dp
from app.partitions.overpartitions import overpartition_table

Backend = Literal["formula", "dp", "series"]


@dataclass(frozen=True, eq=False)
class SequenceAccessor:
    name: str
    backend: str
    values: np.ndarray

    @property
    def bound(self) -> int:
        return int(self.values.size - 1)

    def __call__(self, n: int) -> int:
        if not 0 <= n <= self.bound:
            raise DomainError(f"{self.name}: n={n} fora de [0, {self.bound}]")
        return int(self.values[n])


def nu1_accessor(bound: int, tables: Optional[DivisorTables] = None) -> SequenceAccessor:
    tables = tables if tables is not None and tables.bound >= bound else build_divisor_tables(bound)
    return SequenceAccessor("nu1", "formula", tables.d[: bound + 1])


def nu2_accessor(
    bound: int,
    backend: Backend = "formula",
    modulus: int = 4,
    tables: Optional[DivisorTables] = None,
) -> SequenceAccessor:
    if backend == "formula":
        tables = tables if tables is not None and tables.bound >= bound else build_divisor_tables(bound)
        return SequenceAccessor("nu2", backend, nu2_table_formula(tables)[: bound + 1])
    if backend == "dp":
        return SequenceAccessor("nu2", backend, nu_table_dp(bound, 2, modulus).column(2))
    raise DomainError(f"backend {backend!r} nao disponivel para nu2")


def nu3_accessor(
    bound: int,
    backend: Backend = "dp",
    modulus: int = 2,
    tables: Optional[DivisorTables] = None,
) -> SequenceAccessor:
    if backend == "dp":
        return SequenceAccessor("nu3", backend, nu_table_dp(bound, 3, modulus).column(3))
    if backend == "formula":
        tables = tables if tables is not None and tables.bound >= bound else build_divisor_tables(bound)
        return SequenceAccessor("nu3", backend, nu3_table_formula(tables)[: bound + 1])
    raise DomainError(f"backend {backend!r} nao disponivel para nu3")


def nuk_accessor(k: int, bound: int, modulus: int) -> SequenceAccessor:
    if not 1 <= k <= 8:
        raise DomainError(f"k deve estar em [1, 8] (recebido {k})")
    return SequenceAccessor(f"nu{k}", "dp", nu_table_dp(bound, k, modulus).column(k))


def overpartition_accessor(bound: int, modulus: int = 16) -> SequenceAccessor:
    return SequenceAccessor("overpartition", "series", overpartition_table(bound, modulus).coeffs)


def build_accessor(
    target: str,
    bound: int,
    modulus: int,
    backend: Optional[str] = None,
    tables: Optional[DivisorTables] = None,
) -> SequenceAccessor:
    """Despacho por nome de alvo: nu1, nu2, nu3, nuK (K <= 8), overpartition."""
    if target == "nu1":
        return nu1_accessor(bound, tables)
    if target == "nu2":
        return nu2_accessor(bound, backend or "formula", modulus, tables)
    if target == "nu3":
        return nu3_accessor(bound, backend or "dp", modulus, tables)
    if target == "overpartition":
        if backend not in (None, "series"):
            raise DomainError(f"backend {backend!r} nao disponivel para overpartition")
        return overpartition_accessor(bound, modulus)
    if target.startswith("nu") and target[2:].isdigit():
        return nuk_accessor(int(target[2:]), bound, modulus)
    raise DomainError(f"alvo desconhecido: {target!r}")
