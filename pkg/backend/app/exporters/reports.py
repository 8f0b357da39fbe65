# backend/app/exporters/reports.py
"""
Renderizacao e exportacao de relatorios (texto, CSV, jsonl).

Objetivo:
- Receber records (list[dict])
- Normalizar para um schema estavel
- Renderizar de forma deterministica; tempos vao numa linha de trailer
  "# elapsed_ms ..." fora do corpo
"""

from __future__ import annotations

from pathlib import Path
import sys
from typing import Any, Iterable, Mapping, Optional, TextIO

import pandas as pd

from app.config import settings
from app.errors import DomainError
from app.partitions.nu import NuTable
from app.transformations.normalize import normalize_records

TRAILER_PREFIX = "# elapsed_ms"


def _render_text(df: pd.DataFrame) -> str:
    if df.empty:
        return "  ".join(df.columns) + "\n"
    return df.to_string(index=False, na_rep="-") + "\n"


def render_records(
    records: Iterable[Mapping[str, Any]],
    schema_name: str,
    fmt: str = "text",
) -> str:
    """Corpo do relatorio no formato pedido (text, csv, jsonl)."""
    df = normalize_records(records, schema_name=schema_name)
    if fmt == "text":
        return _render_text(df)
    if fmt == "csv":
        return df.to_csv(index=False, lineterminator="\n")
    if fmt == "jsonl":
        if df.empty:
            return ""
        body = df.to_json(orient="records", lines=True)
        return body if body.endswith("\n") else body + "\n"
    raise DomainError(f"formato desconhecido: {fmt!r}")


def elapsed_trailer(timings: Iterable[tuple[str, float]]) -> str:
    """'# elapsed_ms id=12.3 id2=4.0' (sempre a ultima linha)."""
    parts = [f"{name}={elapsed:.1f}" for name, elapsed in timings]
    return " ".join([TRAILER_PREFIX, *parts]) + "\n"


def strip_trailer(report: str) -> str:
    """Remove a linha de trailer (para comparacoes byte a byte)."""
    return "".join(line for line in report.splitlines(keepends=True) if not line.startswith(TRAILER_PREFIX))


def write_report(report: str, output_path: Optional[str] = None, stream: Optional[TextIO] = None) -> Optional[Path]:
    """Escreve em `output_path` (se informado) ou em stdout."""
    if output_path:
        path = Path(output_path)
        path.parent.mkdir(parents=True, exist_ok=True)
        path.write_text(report, encoding="utf-8")
        return path
    (stream or sys.stdout).write(report)
    return None


def export_to_csv(
    records: Iterable[Mapping[str, Any]],
    filename: str,
    schema_name: Optional[str] = None,
) -> Path:
    """Grava `records` como CSV em settings.output_dir e devolve o caminho.

    Com `schema_name` ("checks", "nu_table", "scan_candidates") as colunas,
    tipos e ordem de linhas seguem o schema.
    """
    target = Path(settings.output_dir).resolve() / filename
    target.parent.mkdir(parents=True, exist_ok=True)
    normalize_records(records, schema_name=schema_name).to_csv(target, index=False, encoding="utf-8")
    return target


def export_nu_table(table: NuTable, filename: str = "nu_table.csv") -> Path:
    return export_to_csv(table.records(), filename, schema_name="nu_table")
