# backend/app/orchestration/run_dissect.py
"""
Orquestracao do subcomando dissect.

Cada check nomeado tem um trunc minimo; R36 acima de LONG_TRUNC exige --long.
"""

from __future__ import annotations

import logging
from typing import Callable

from app.congruence.checks import CheckReport, timed_call
from app.congruence.nu3_reduction import nu3_reduction_range
from app.congruence.overpartition_chain import (
    EXACT_MODULI,
    check_overpartition_chain,
    lemma_2_dissection,
    lemma_3_dissection,
    two_adic_checks,
)
from app.congruence.sigma_forms import (
    all_even_report,
    build_T16,
    f_g_theta_parity_check,
    g_family_checks,
    r36_checks,
)
from app.errors import DomainError
from app.orchestration.run_config import RunConfig

logger = logging.getLogger(__name__)

LONG_TRUNC = 10_000
# Limite da comparacao R(q) x rep_count no modo padrao
REP_PARITY_BOUND = 10_000

MIN_TRUNC: dict[str, int] = {
    "lemma-3": 2,
    "lemma-2": 2,
    "two-adic": 2,
    # abaixo disso a variante f6^7 ainda concorda com a serie
    "op-chain": 200,
    "T16": 32,
    "R36": 31,
    "G-families": 36,
    "F-G-theta": 2,
    "nu3-reduction": 30,
}


def _each_modulus(check: Callable[[int, int], CheckReport]) -> Callable[[int], list[CheckReport]]:
    return lambda trunc: [r for modulus in EXACT_MODULI for r in timed_call(check, trunc, modulus)]


CHECKS: dict[str, Callable[[int], list[CheckReport]]] = {
    "lemma-3": _each_modulus(lemma_3_dissection),
    "lemma-2": _each_modulus(lemma_2_dissection),
    "two-adic": lambda trunc: [two_adic_checks(trunc)],
    "op-chain": check_overpartition_chain,
    "T16": lambda trunc: [all_even_report("T16-even", build_T16(trunc))],
    "R36": lambda trunc: r36_checks(trunc, min(trunc - 1, REP_PARITY_BOUND)),
    "G-families": g_family_checks,
    "F-G-theta": lambda trunc: [f_g_theta_parity_check(trunc - 1)],
    "nu3-reduction": nu3_reduction_range,
}


def run_dissect(config: RunConfig, check: str) -> list[CheckReport]:
    if check not in CHECKS:
        raise DomainError(f"check desconhecido: {check!r} (disponiveis: {', '.join(CHECKS)})")
    minimum = MIN_TRUNC[check]
    if config.trunc < minimum:
        raise DomainError(f"{check} exige --trunc >= {minimum} (recebido {config.trunc})")
    if check == "R36" and config.trunc > LONG_TRUNC and not config.long_tests:
        raise DomainError(f"R36 com trunc > {LONG_TRUNC} exige --long")

    logger.info("Iniciando dissect %s ate trunc=%s", check, config.trunc)
    reports = timed_call(CHECKS[check], config.trunc)

    for report in reports:
        if not report.passed:
            logger.warning("%s: %s", report.check_id, report.counterexample)
    logger.info("dissect %s concluido (%s checks).", check, len(reports))
    return reports
