# backend/app/orchestration/run_scan.py
"""
Orquestracao do subcomando scan.

A ausencia de candidatos vale apenas ate o bound informado no relatorio.
"""

from __future__ import annotations

import logging
from typing import Optional, Sequence

from app.congruence.scanner import ScanCandidate, scan_progressions
from app.errors import DomainError
from app.orchestration.run_config import RunConfig

logger = logging.getLogger(__name__)


def parse_moduli(text: Optional[str]) -> Optional[list[int]]:
    """'3,5,7' -> [3, 5, 7]."""
    if not text:
        return None
    try:
        return [int(part) for part in text.split(",") if part.strip()]
    except ValueError:
        raise DomainError(f"--moduli deve ser uma lista de inteiros, ex. 3,5,7 (recebido {text!r})") from None


def run_scan(
    config: RunConfig,
    target: str,
    amax: int,
    moduli: Optional[Sequence[int]] = None,
    primitive_only: bool = False,
) -> list[ScanCandidate]:
    logger.info("Iniciando scan %s. amax=%s bound=%s", target, amax, config.bound)
    candidates = scan_progressions(amax, config.bound, target, moduli=moduli)
    if primitive_only:
        candidates = [c for c in candidates if c.primitive]
    if not candidates:
        logger.info("Nenhum candidato ate bound=%s.", config.bound)
    logger.info("scan concluido (%s candidatos).", len(candidates))
    return candidates
