# backend/app/orchestration/run_config.py
"""
Configuracao de uma execucao da CLI.

Precedencia: flags > arquivo --config (key=value) > Settings (env/.env).
"""

from __future__ import annotations

from dataclasses import dataclass
from typing import Any, Mapping, Optional

from app.config import load_config_file, settings
from app.errors import DomainError

OUTPUT_FORMATS = ("text", "csv", "jsonl")
CONFIG_KEYS = ("bound", "trunc", "modulus", "long_tests", "output_format", "output_path", "bruteforce_cap")


@dataclass
class RunConfig:
    subcommand: str
    bound: int
    trunc: int
    modulus: int = 2
    progression: Optional[tuple[int, int]] = None
    long_tests: bool = False
    output_format: str = "text"
    output_path: Optional[str] = None
    bruteforce_cap: int = 60

    def __post_init__(self) -> None:
        if self.bound < 1 or self.trunc < 1:
            raise DomainError(f"bound e trunc devem ser >= 1 (recebido {self.bound}, {self.trunc})")
        if self.modulus < 2:
            raise DomainError(f"modulo deve ser >= 2 (recebido {self.modulus})")
        if self.output_format not in OUTPUT_FORMATS:
            raise DomainError(f"formato desconhecido: {self.output_format!r}")
        if self.progression is not None:
            A, B = self.progression
            if A < 1 or not 0 <= B < A:
                raise DomainError(f"progressao invalida: A={A}, B={B}")


def parse_progression(text: str) -> tuple[int, int]:
    """'36,30' -> (36, 30)."""
    parts = [p.strip() for p in text.split(",")]
    if len(parts) != 2 or not all(p.lstrip("-").isdigit() for p in parts):
        raise DomainError(f"progressao deve ser 'A,B' (recebido {text!r})")
    return int(parts[0]), int(parts[1])


def _as_bool(value: Any) -> bool:
    if isinstance(value, bool):
        return value
    return str(value).strip().lower() in ("1", "true", "yes", "sim", "on")


def build_run_config(
    subcommand: str,
    flags: Mapping[str, Any],
    config_path: Optional[str] = None,
    default_modulus: int = 2,
) -> RunConfig:
    """Monta o RunConfig; flags com valor None caem para o arquivo e depois Settings."""
    file_values = load_config_file(config_path) if config_path else {}
    unknown = sorted(set(file_values) - set(CONFIG_KEYS))
    if unknown:
        raise DomainError(f"chaves desconhecidas no arquivo de configuracao: {unknown}")

    defaults: dict[str, Any] = {
        "bound": settings.default_bound,
        "trunc": settings.default_trunc,
        "modulus": default_modulus,
        "long_tests": False,
        "output_format": settings.output_format,
        "output_path": None,
        "bruteforce_cap": settings.bruteforce_cap,
    }

    def pick(key: str) -> Any:
        if flags.get(key) is not None:
            return flags[key]
        if key in file_values:
            return file_values[key]
        return defaults[key]

    try:
        config = RunConfig(
            subcommand=subcommand,
            bound=int(pick("bound")),
            trunc=int(pick("trunc")),
            modulus=int(pick("modulus")),
            progression=flags.get("progression"),
            long_tests=_as_bool(pick("long_tests")),
            output_format=str(pick("output_format")),
            output_path=pick("output_path"),
            bruteforce_cap=int(pick("bruteforce_cap")),
        )
    except ValueError as exc:
        if isinstance(exc, DomainError):
            raise
        raise DomainError(f"valor invalido na configuracao: {exc}") from exc
    return config
