# backend/app/congruence/nu3_reduction.py
"""
Reducao de nu_3(n) mod 2 para n == 30 (mod 36).

Avalia (-X + Y)/2 + Z (mod 2), com
  X = sum_{k=1}^{n-1} d(k) sigma_1(n-k)
  Y = sum_{k >= 1, 2k^2 < n} d(k^2)^2 d(n - 2k^2)
  Z = sum d(j) d(k) d(l) sobre quadrados distintos 0 < j < k < l, j+k+l = n
e compara com nu_3(n) mod 2 (esperado: ambos 0).
"""

from __future__ import annotations

from dataclasses import dataclass
from math import isqrt
import logging
from typing import Optional

import numpy as np

from app.arith.divisors import DivisorTables, build_divisor_tables
from app.congruence.checks import CheckReport, report_from_failures
from app.congruence.progressions import progression_terms
from app.errors import ConsistencyError, DomainError
from app.partitions.nu import NuTable, nu_table_dp

logger = logging.getLogger(__name__)


@dataclass(frozen=True)
class ReductionTerms:
    n: int
    X: int
    Y: int
    Z: int

    @property
    def value(self) -> int:
        """(-X + Y)/2 + Z reduzido mod 2."""
        return ((self.Y - self.X) // 2 + self.Z) % 2


def reduction_terms(n: int, tables: DivisorTables) -> ReductionTerms:
    if not 1 <= n <= tables.bound:
        raise DomainError(f"n={n} fora das tabelas (1..{tables.bound})")
    d, sigma1 = tables.d, tables.sigma1
    X = int(np.dot(d[1:n], sigma1[n - 1 : 0 : -1])) if n > 1 else 0

    ks = np.arange(1, isqrt((n - 1) // 2) + 1, dtype=np.int64)
    Y = int(np.sum(d[ks * ks] ** 2 * d[n - 2 * ks * ks]))

    Z = 0
    a = 1
    while 3 * a * a < n:
        b = a + 1
        while a * a + 2 * b * b < n:
            rest = n - a * a - b * b
            c = isqrt(rest)
            if c * c == rest and c > b:
                Z += int(d[a * a] * d[b * b] * d[rest])
            b += 1
        a += 1

    if (Y - X) % 2:
        raise ConsistencyError(f"-X + Y impar para n={n} (X={X}, Y={Y})")
    return ReductionTerms(n=n, X=X, Y=Y, Z=Z)


def nu3_reduction_check(n: int, tables: DivisorTables, nu: NuTable) -> bool:
    """True se o lado direito concorda com nu_3(n) mod 2 e ambos sao 0."""
    if n % 36 != 30:
        raise DomainError(f"reducao definida para n == 30 (mod 36) (recebido {n})")
    terms = reduction_terms(n, tables)
    nu3 = nu.value(n, 3) % 2
    if terms.value != nu3:
        logger.warning("n=%s: reducao=%s nu3 mod 2=%s", n, terms.value, nu3)
    return terms.value == nu3 == 0


def reduction_preconditions(n: int, tables: DivisorTables, nu2: int) -> dict[str, bool]:
    """Os quatro fatos de que a reducao depende (quaisquer tres implicam o quarto)."""
    d = tables.d
    convolution = int(np.dot(d[1:n], d[n - 1 : 0 : -1]))
    return {
        "d_mod8": tables.d_of(n) % 8 == 0,
        "sigma1_mod8": tables.sigma1_of(n) % 8 == 0,
        "convolution_mod8": convolution % 8 == 0,
        "nu2_mod4": nu2 % 4 == 0,
    }


def nu3_reduction_range(
    bound: int,
    tables: Optional[DivisorTables] = None,
    nu: Optional[NuTable] = None,
) -> list[CheckReport]:
    """Reducao, d + sigma_2 == 0 (mod 12) e pre-condicoes para n = 36j+30 <= bound."""
    tables = tables if tables is not None and tables.bound >= bound else build_divisor_tables(bound)
    nu = nu if nu is not None and nu.bound >= bound and nu.kmax >= 3 else nu_table_dp(bound, 3, 2**20)

    reduction_bad, sigma2_bad, precondition_bad = [], [], []
    for n in progression_terms(36, 30, bound):
        n = int(n)
        if not nu3_reduction_check(n, tables, nu):
            terms = reduction_terms(n, tables)
            reduction_bad.append((n, terms.value, nu.value(n, 3) % 2))
        if (tables.d_of(n) + tables.sigma2_of(n)) % 12:
            sigma2_bad.append(n)
        facts = reduction_preconditions(n, tables, nu.value(n, 2))
        if not all(facts.values()):
            precondition_bad.append((n, facts))

    params = "A=36;B=30"
    return [
        report_from_failures(
            "nu3-reduction",
            params,
            bound,
            reduction_bad,
            describe=lambda f: f"n={f[0]} reducao={f[1]} nu3_mod2={f[2]}",
        ),
        report_from_failures("d-plus-sigma2-mod12", params, bound, sigma2_bad),
        report_from_failures(
            "nu3-reduction-preconditions",
            params,
            bound,
            precondition_bad,
            describe=lambda f: f"n={f[0]} {f[1]}",
        ),
    ]
