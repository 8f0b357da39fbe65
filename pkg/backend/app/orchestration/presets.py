# backend/app/orchestration/presets.py
"""
Presets do subcomando verify: quadruplas (alvo, progressoes, modulo, backend).
"""

from __future__ import annotations

from dataclasses import dataclass
from typing import Optional

from app.congruence.progressions import THEOREM_PROGRESSIONS
from app.errors import DomainError


@dataclass(frozen=True)
class Preset:
    name: str
    target: str
    modulus: int
    progressions: tuple[tuple[int, int], ...]
    backend: Optional[str] = None
    description: str = ""


PRESETS: dict[str, Preset] = {
    "thm-nu2": Preset(
        "thm-nu2", "nu2", 4, THEOREM_PROGRESSIONS, "formula",
        "nu_2(An+B) == 0 (mod 4) nas quatro progressoes",
    ),
    "thm-nu3": Preset(
        "thm-nu3", "nu3", 2, THEOREM_PROGRESSIONS, "dp",
        "nu_3(An+B) == 0 (mod 2) nas quatro progressoes",
    ),
    "thm-op16": Preset(
        "thm-op16", "overpartition", 16, THEOREM_PROGRESSIONS, "series",
        "p-barra(An+B) == 0 (mod 16) nas quatro progressoes",
    ),
    "thm-16-14": Preset(
        "thm-16-14", "nu2", 4, ((16, 14),), "formula",
        "nu_2(16n+14) == 0 (mod 4)",
    ),
    "thm-nu1": Preset(
        "thm-nu1", "nu1", 8, THEOREM_PROGRESSIONS, "formula",
        "d(An+B) == 0 (mod 8) via primos de ordem impar",
    ),
    # kim-mod8 nao e uma progressao: roda kim_mod8_check e a equivalencia de paridade
    "kim-mod8": Preset("kim-mod8", "overpartition", 8, (), "series", "p-barra(n) == 0 (mod 8) fora de quadrados"),
}


def get_preset(name: str) -> Preset:
    try:
        return PRESETS[name]
    except KeyError:
        raise DomainError(f"preset desconhecido: {name!r} (disponiveis: {', '.join(PRESETS)})") from None
