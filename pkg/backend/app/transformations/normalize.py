# backend/app/transformations/normalize.py
"""
Records (list[dict]) -> DataFrame com schema estavel.

Etapas, na ordem: tipos (Int64 e boolean nullable), colunas do schema e
ordenacao pelas chaves do schema. Sem schema, o DataFrame sai como veio.
"""

from __future__ import annotations

from typing import Any, Iterable, Mapping, Optional

import pandas as pd

from app.transformations.schema import BOOL_COLUMNS, INT_COLUMNS, SCHEMAS, SORT_KEYS

INT64_LIMIT = 2**63


def _fits_int64(values: pd.Series) -> bool:
    return all(abs(int(v)) < INT64_LIMIT for v in values if not pd.isna(v))


def _apply_types(df: pd.DataFrame, schema_name: str) -> pd.DataFrame:
    for col in INT_COLUMNS.get(schema_name, []):
        if col not in df.columns:
            continue
        # nu_k(n) exato passa de int64 cedo; esses valores ficam como objeto
        if _fits_int64(df[col]):
            df[col] = pd.to_numeric(df[col], errors="coerce").astype("Int64")
    for col in BOOL_COLUMNS.get(schema_name, []):
        if col in df.columns:
            df[col] = df[col].astype("boolean")
    return df


def _reindex(df: pd.DataFrame, columns: list[str]) -> pd.DataFrame:
    missing = [col for col in columns if col not in df.columns]
    if missing:
        df = df.assign(**{col: pd.NA for col in missing})
    return df.loc[:, columns]


def normalize_records(
    records: Iterable[Mapping[str, Any]],
    schema_name: Optional[str] = None,
) -> pd.DataFrame:
    """DataFrame com as colunas, tipos e ordem de linhas do schema informado."""
    df = pd.DataFrame.from_records(list(records))
    if schema_name not in SCHEMAS:
        return df
    if df.empty:
        return pd.DataFrame(columns=SCHEMAS[schema_name])

    df = _reindex(_apply_types(df, schema_name), SCHEMAS[schema_name])
    if schema_name in SORT_KEYS:
        df = df.sort_values(SORT_KEYS[schema_name], kind="stable").reset_index(drop=True)
    return df
