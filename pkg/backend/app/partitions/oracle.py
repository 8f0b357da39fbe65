# backend/app/partitions/oracle.py
"""
Concordancia entre os caminhos de calculo de nu_k e de p-barra.

- formulas fechadas de nu_2/nu_3 x DP exata x forca bruta (ate o cap)
- p-barra(n) pela serie x sum 2^k nu_k(n) pela DP modular
"""

from __future__ import annotations

from dataclasses import dataclass, field
import logging
import time
from typing import Any, Callable, Optional

from app.arith.divisors import DivisorTables, build_divisor_tables
from app.config import settings
from app.errors import ResourceLimitError
from app.partitions.formulas import nu2_table_formula, nu3_table_formula
from app.partitions.nu import NuTable, nu_bruteforce, nu_table_dp
from app.partitions.overpartitions import overpartition_from_nu, overpartition_table, required_kmax

logger = logging.getLogger(__name__)

FORMULAS = {2: nu2_table_formula, 3: nu3_table_formula}


@dataclass
class OracleResult:
    check_id: str
    params: str
    bound: int
    mismatches: list[dict[str, Any]] = field(default_factory=list)
    elapsed_ms: Optional[float] = None

    @property
    def passed(self) -> bool:
        return not self.mismatches


def nu_agreement(
    k: int,
    formula_bound: int,
    bruteforce_cap: int,
    tables: Optional[DivisorTables] = None,
    dp_table: Optional[NuTable] = None,
) -> OracleResult:
    """Compara formula, DP exata e forca bruta para nu_k, k em {2, 3}."""
    tables = tables or build_divisor_tables(formula_bound)
    dp_table = dp_table or nu_table_dp(formula_bound, k, modulus=None)
    formula = FORMULAS[k](tables)

    result = OracleResult(
        check_id=f"oracle-nu{k}",
        params=f"k={k};bruteforce_cap={bruteforce_cap}",
        bound=formula_bound,
    )
    for n in range(1, formula_bound + 1):
        values = {"formula": int(formula[n]), "dp": dp_table.value(n, k)}
        if n <= bruteforce_cap:
            values["bruteforce"] = nu_bruteforce(n, k, cap=bruteforce_cap)
        if len(set(values.values())) > 1:
            result.mismatches.append({"n": n, "k": k, **values})
    return result


def overpartition_identity(bound: int = 500, modulus: int = 2**20) -> OracleResult:
    """p-barra(n) == sum_k 2^k nu_k(n) (mod modulus) para 1 <= n <= bound."""
    kmax = required_kmax(bound, modulus)
    nu = nu_table_dp(bound, kmax, modulus=modulus)
    series = overpartition_table(bound, modulus)

    result = OracleResult(
        check_id="oracle-overpartition",
        params=f"modulus={modulus};kmax={kmax}",
        bound=bound,
    )
    for n in range(1, bound + 1):
        from_nu = overpartition_from_nu(n, nu)
        if from_nu != series[n]:
            result.mismatches.append({"n": n, "k": kmax, "series": series[n], "from_nu": from_nu})
    return result


def _timed(check: Callable[..., OracleResult], *args: Any) -> OracleResult:
    started = time.perf_counter()
    result = check(*args)
    result.elapsed_ms = (time.perf_counter() - started) * 1000
    return result


def run_oracle_suite(
    bruteforce_cap: Optional[int] = None,
    nu2_bound: int = 120,
    nu3_bound: int = 80,
    overpartition_bound: int = 500,
    dp_tables: Optional[dict[int, NuTable]] = None,
) -> list[OracleResult]:
    """Roda as tres concordancias. `dp_tables` permite injetar tabelas (testes)."""
    cap = settings.bruteforce_cap if bruteforce_cap is None else bruteforce_cap
    if cap > settings.bruteforce_cap:
        raise ResourceLimitError(
            f"bruteforce_cap={cap} acima de CONGRUENCE_FORGE_BRUTEFORCE_CAP ({settings.bruteforce_cap})"
        )
    dp_tables = dp_tables or {}
    tables = build_divisor_tables(max(nu2_bound, nu3_bound))

    results = [
        _timed(nu_agreement, 2, nu2_bound, min(cap, nu2_bound), tables, dp_tables.get(2)),
        _timed(nu_agreement, 3, nu3_bound, min(cap, nu3_bound), tables, dp_tables.get(3)),
        _timed(overpartition_identity, overpartition_bound),
    ]
    for r in results:
        if r.passed:
            logger.info("%s ok ate %s", r.check_id, r.bound)
        else:
            logger.warning("%s: %s divergencias (primeira: %s)", r.check_id, len(r.mismatches), r.mismatches[0])
    return results
