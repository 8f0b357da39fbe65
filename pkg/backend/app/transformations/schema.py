# backend/app/transformations/schema.py
"""
Schemas de saida dos relatorios.

Ideia:
- Definir colunas estaveis (e ordem) para cada dataset.
- Assim CSV e jsonl nao mudam de forma quando faltarem campos.
"""

from __future__ import annotations

SCHEMAS: dict[str, list[str]] = {
    "checks": [
        "check_id",
        "params",
        "bound",
        "status",
        "counterexample",
    ],
    "nu_table": [
        "n",
        "k",
        "value",
    ],
    "scan_candidates": [
        "target",
        "A",
        "B",
        "modulus",
        "bound",
        "terms",
        "sigma1_mod8",
        "d_half_square",
        "avoids_two_squares",
        "nu2_mod4",
        "all_conditions",
    ],
}

INT_COLUMNS: dict[str, list[str]] = {
    "checks": ["bound"],
    "nu_table": ["n", "k", "value"],
    "scan_candidates": ["A", "B", "modulus", "bound", "terms"],
}

BOOL_COLUMNS: dict[str, list[str]] = {
    "scan_candidates": ["sigma1_mod8", "d_half_square", "avoids_two_squares", "nu2_mod4", "all_conditions"],
}

# Ordem deterministica das linhas
SORT_KEYS: dict[str, list[str]] = {
    "nu_table": ["k", "n"],
    "scan_candidates": ["target", "A", "B"],
}
