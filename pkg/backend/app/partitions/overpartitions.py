# backend/app/partitions/overpartitions.py
"""
Sobreparticoes: p(n) barrado, pela serie f_2 / f_1^2 ou pela soma
sum_k 2^k nu_k(n).
"""

from __future__ import annotations

import logging

from app.config import settings
from app.errors import DomainError, ResourceLimitError
from app.partitions.nu import NuTable, max_feasible_k
from app.qseries.eta import EtaQuotientSpec, expand_eta_quotient
from app.qseries.series import Series

logger = logging.getLogger(__name__)

OVERPARTITION_SPEC = EtaQuotientSpec.of({2: 1, 1: -2})


def overpartition_table(bound: int, modulus: int) -> Series:
    """p-barra(n) mod `modulus` para n = 0..bound."""
    if bound < 0:
        raise DomainError(f"bound deve ser >= 0 (recebido {bound})")
    if bound + 1 > settings.max_series_trunc:
        raise ResourceLimitError(f"bound={bound} excede CONGRUENCE_FORGE_MAX_SERIES_TRUNC")
    logger.debug("Expandindo f2/f1^2 ate %s mod %s", bound, modulus)
    return expand_eta_quotient(OVERPARTITION_SPEC, bound + 1, modulus)


def required_kmax(n: int, modulus: int | None) -> int:
    """Menor kmax que ainda determina sum 2^k nu_k(n) mod `modulus`.

    Com modulo 2^e os termos k >= e somem.
    """
    feasible = max_feasible_k(n)
    if modulus is not None and modulus & (modulus - 1) == 0:
        return min(feasible, modulus.bit_length() - 2)
    return feasible


def overpartition_from_nu(n: int, nu: NuTable) -> int:
    if not 1 <= n <= nu.bound:
        raise DomainError(f"n={n} fora da tabela nu (1..{nu.bound})")
    needed = required_kmax(n, nu.modulus)
    if nu.kmax < needed:
        raise DomainError(f"kmax={nu.kmax} insuficiente para n={n} (precisa {needed})")

    total = sum(2**k * nu.value(n, k) for k in range(1, min(nu.kmax, max_feasible_k(n)) + 1))
    return total % nu.modulus if nu.modulus is not None else total
