"""
Configuracao do congruence-forge.

Variaveis CONGRUENCE_FORGE_* vem do ambiente ou de arquivos .env (raiz do
repositorio e backend/). O ambiente tem prioridade; valores vazios no
ambiente sao preenchidos pelo .env. Tambem le o arquivo plano key=value
aceito pela CLI via --config.
"""

from dataclasses import dataclass
import os
from pathlib import Path

from dotenv import dotenv_values

REPO_DIR = Path(__file__).resolve().parents[2]
ENV_FILES = (REPO_DIR / ".env", REPO_DIR / "backend" / ".env")
ENV_PREFIX = "CONGRUENCE_FORGE_"


def _apply_env_files(paths=ENV_FILES) -> None:
    """Copia para os.environ as chaves do .env ausentes (ou vazias) no ambiente."""
    from_files: dict[str, str] = {}
    for path in paths:
        if not path.is_file():
            continue
        # backend/.env sobrescreve a raiz
        from_files.update({k: v for k, v in dotenv_values(path).items() if v})
    for key, value in from_files.items():
        if not os.environ.get(key):
            os.environ[key] = value


_apply_env_files()


def _env_str(name: str, default: str) -> str:
    return os.environ.get(ENV_PREFIX + name, "").strip() or default


def _env_int(name: str, default: int) -> int:
    raw = _env_str(name, "").replace("_", "")
    return int(raw) if raw else default


@dataclass
class Settings:
    """Limites de recurso e valores padrao da CLI.

    Tabelas, series e DP acima dos limites levantam ResourceLimitError em
    vez de esgotar a memoria.
    """

    # Progressoes independentes (verify com preset, scan).
    threads: int = _env_int("THREADS", os.cpu_count() or 1)

    max_table_bound: int = _env_int("MAX_TABLE_BOUND", 2_000_000)
    max_series_trunc: int = _env_int("MAX_SERIES_TRUNC", 500_000)
    # Celulas (kmax+1) * (bound+1) da DP de nu_k.
    max_dp_cells: int = _env_int("MAX_DP_CELLS", 50_000_000)
    bruteforce_cap: int = _env_int("BRUTEFORCE_CAP", 60)
    max_scan_amax: int = _env_int("MAX_SCAN_AMAX", 400)

    default_bound: int = _env_int("DEFAULT_BOUND", 20_000)
    default_trunc: int = _env_int("DEFAULT_TRUNC", 2_000)

    output_dir: str = _env_str("OUTPUT_DIR", "./data")
    output_format: str = _env_str("OUTPUT_FORMAT", "text")
    log_level: str = _env_str("LOG_LEVEL", "INFO").upper()


settings = Settings()


def load_config_file(path: str | Path) -> dict[str, str]:
    """Le um arquivo key=value e devolve apenas as chaves com valor.

    O formato e o mesmo de um .env; chaves sao normalizadas para minusculas.
    """
    config_path = Path(path)
    if not config_path.exists():
        raise FileNotFoundError(f"arquivo de configuracao nao encontrado: {config_path}")
    values = dotenv_values(config_path)
    return {
        key.strip().lower(): value.strip()
        for key, value in values.items()
        if value is not None and value.strip() != ""
    }
