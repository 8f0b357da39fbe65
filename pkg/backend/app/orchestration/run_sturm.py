# backend/app/orchestration/run_sturm.py
"""Orquestracao do subcomando sturm."""

from __future__ import annotations

import logging

from app.congruence.sturm import STURM_INDEX_FACTORS, SturmInput, sturm_bound

logger = logging.getLogger(__name__)


def run_sturm(weight: int, level: int, factor: int = 1) -> int:
    bound = sturm_bound(SturmInput(weight, level, factor))
    logger.info("Sturm(peso=%s, nivel=%s, fator=%s) = %s", weight, level, factor, bound)
    return bound


def progression_sturm_bounds(weight: int, level: int) -> dict[int, int]:
    """Limite para cada progressao A com o fator de indice conhecido."""
    return {A: run_sturm(weight, level, factor) for A, factor in sorted(STURM_INDEX_FACTORS.items())}
