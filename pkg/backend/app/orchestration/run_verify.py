# backend/app/orchestration/run_verify.py
"""
Orquestracao do subcomando verify.

Sequencia:
1) resolve preset ou progressao avulsa (--progression A,B --target)
2) monta o acessor da sequencia uma unica vez ate o bound
3) confere as progressoes em paralelo (ThreadPoolExecutor)
4) devolve CheckReports ordenados por (A, B)
"""

from __future__ import annotations

from concurrent.futures import ThreadPoolExecutor
import logging
from typing import Optional

from app.config import settings
from app.congruence.accessors import build_accessor
from app.congruence.checks import CheckReport, timed_call
from app.congruence.progressions import (
    ProgressionReport,
    kim_mod8_check,
    kim_parity_equivalence,
    nu1_odd_order_check,
    verify_progression,
)
from app.errors import DomainError
from app.orchestration.presets import get_preset
from app.orchestration.run_config import RunConfig

logger = logging.getLogger(__name__)


def _verify_many(
    target: str,
    progressions: tuple[tuple[int, int], ...],
    modulus: int,
    bound: int,
    backend: Optional[str],
) -> list[ProgressionReport]:
    accessor = build_accessor(target, bound, modulus, backend=backend)
    with ThreadPoolExecutor(max_workers=settings.threads) as pool:
        reports = list(
            pool.map(lambda ab: verify_progression(accessor, ab[0], ab[1], modulus, bound), progressions)
        )
    return sorted(reports, key=lambda r: (r.A, r.B))


def run_verify(
    config: RunConfig,
    preset: Optional[str] = None,
    target: Optional[str] = None,
    backend: Optional[str] = None,
) -> list[CheckReport]:
    """Executa um preset ou a progressao de config.progression."""
    if preset is None and config.progression is None:
        raise DomainError("verify exige --preset ou --progression")

    logger.info("Iniciando verify. preset=%s bound=%s", preset, config.bound)
    reports: list[CheckReport] = []

    if preset is not None:
        chosen = get_preset(preset)
        if chosen.name == "kim-mod8":
            reports.extend(timed_call(kim_mod8_check, config.bound))
            reports.extend(timed_call(kim_parity_equivalence, config.bound))
        else:
            progression_reports = _verify_many(
                chosen.target,
                chosen.progressions,
                chosen.modulus,
                config.bound,
                backend or chosen.backend,
            )
            reports.extend(r.to_check() for r in progression_reports)
            if chosen.target == "nu1":
                for A, B in chosen.progressions:
                    reports.extend(timed_call(nu1_odd_order_check, A, B, config.bound))
    else:
        if target is None:
            raise DomainError("--progression exige --target")
        A, B = config.progression
        single = _verify_many(target, ((A, B),), config.modulus, config.bound, backend)
        reports.extend(r.to_check() for r in single)

    for report in reports:
        if report.passed:
            logger.info("%s: pass ate %s", report.check_id, report.bound)
        else:
            logger.warning("%s: contraexemplo %s", report.check_id, report.counterexample)
    logger.info("verify concluido.")
    return reports
