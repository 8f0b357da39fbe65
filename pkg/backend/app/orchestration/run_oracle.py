# backend/app/orchestration/run_oracle.py
"""
Orquestracao do subcomando oracle: formula x DP x forca bruta para nu_2 e
nu_3, e a identidade p-barra(n) = sum_k 2^k nu_k(n).
"""

from __future__ import annotations

import logging
from typing import Optional

from app.congruence.checks import CheckReport
from app.orchestration.run_config import RunConfig
from app.partitions.nu import NuTable
from app.partitions.oracle import OracleResult, run_oracle_suite

logger = logging.getLogger(__name__)


def _describe(mismatch: dict) -> str:
    return " ".join(f"{key}={value}" for key, value in mismatch.items())


def oracle_to_check(result: OracleResult) -> CheckReport:
    if result.passed:
        return CheckReport(result.check_id, result.params, result.bound, "pass", elapsed_ms=result.elapsed_ms)
    return CheckReport(
        result.check_id,
        result.params,
        result.bound,
        "fail",
        counterexample=_describe(result.mismatches[0]),
        elapsed_ms=result.elapsed_ms,
        details={"failures": len(result.mismatches)},
    )


def run_oracle(config: RunConfig, dp_tables: Optional[dict[int, NuTable]] = None) -> list[CheckReport]:
    logger.info("Iniciando oracle. bruteforce_cap=%s", config.bruteforce_cap)
    results = run_oracle_suite(bruteforce_cap=config.bruteforce_cap, dp_tables=dp_tables)
    reports = [oracle_to_check(r) for r in results]
    logger.info("oracle concluido.")
    return reports
