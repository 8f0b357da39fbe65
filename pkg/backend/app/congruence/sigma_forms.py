# backend/app/congruence/sigma_forms.py
"""
Series mod 2 montadas a partir de sigma_1 em progressoes.

- build_sigma_dissection: sum sigma_1(Aj+B) q^{scale(Aj+B)}, opcionalmente
  dividido por 2 nos inteiros antes da reducao
- build_T16: T(q) = F(q)G(q) + F(q^4)F(q^2)
- build_R36: R(q) = sum_{i in S} F_{x,i}(q) G_{y,30-i}(q)
- f_g_theta_parity_check: F e G contra as series theta/primos
"""

from __future__ import annotations

from dataclasses import dataclass
import logging
import time
from typing import Optional, Sequence

import numpy as np

from app.arith.divisors import DivisorTables, build_divisor_tables
from app.congruence.checks import CheckReport, report_from_failures
from app.congruence.representations import section36_parity
from app.errors import DomainError
from app.qseries.dissect import substitute_power
from app.qseries.eta import theta_residue_series
from app.qseries.series import Series, series_add, series_mul

logger = logging.getLogger(__name__)


@dataclass(frozen=True)
class SigmaPiece:
    """Parametros (A, B, halve, scale) de um pedaco F_x ou G_y."""

    label: str
    A: int
    B: int
    halve: bool
    scale: int


# F_{x,i} pareado com G_{y,30-i}, i em S = {1, 25, 13, 4, 16, 28}
R36_PAIRS: tuple[tuple[SigmaPiece, SigmaPiece], ...] = (
    (SigmaPiece("F_x1", 36, 1, False, 1), SigmaPiece("G_y29", 36, 29, True, 1)),
    (SigmaPiece("F_x25", 36, 25, False, 1), SigmaPiece("G_y5", 36, 5, True, 1)),
    (SigmaPiece("F_x13", 36, 13, False, 1), SigmaPiece("G_y17", 36, 17, True, 1)),
    (SigmaPiece("F_x4", 9, 1, False, 4), SigmaPiece("G_y26", 18, 13, False, 2)),
    (SigmaPiece("F_x16", 9, 4, False, 4), SigmaPiece("G_y14", 18, 7, False, 2)),
    (SigmaPiece("F_x28", 9, 7, False, 4), SigmaPiece("G_y2", 18, 1, False, 2)),
)

# G_{y,k} = soma de tres familias (p mod 36, y == +/-eps mod 18)
G_FAMILIES: dict[int, tuple[tuple[int, int], ...]] = {
    29: ((29, 1), (17, 5), (5, 7)),
    17: ((17, 1), (5, 5), (29, 7)),
    5: ((5, 1), (29, 5), (17, 7)),
}


def _tables_for(trunc: int, scale: int, tables: Optional[DivisorTables]) -> DivisorTables:
    needed = max(1, (trunc - 1) // scale)
    if tables is not None and tables.bound >= needed:
        return tables
    return build_divisor_tables(needed)


def build_sigma_dissection(
    A: int,
    B: int,
    halve: bool,
    scale: int,
    trunc: int,
    tables: Optional[DivisorTables] = None,
) -> Series:
    """Coeficiente em scale*(Aj+B) = sigma_1(Aj+B) (ou metade) mod 2."""
    if A < 1 or not 0 <= B < A or scale < 1:
        raise DomainError(f"parametros invalidos A={A}, B={B}, scale={scale}")
    tables = _tables_for(trunc, scale, tables)

    start = B if B > 0 else A
    last = (trunc - 1) // scale
    args = np.arange(start, last + 1, A, dtype=np.int64)
    values = tables.sigma1[args]
    if halve:
        odd = np.flatnonzero(values % 2)
        if odd.size:
            j = int((args[odd[0]] - B) // A)
            raise DomainError(f"sigma_1({A}*{j}+{B}) = {int(values[odd[0]])} e impar; nao pode ser dividido")
        values = values // 2

    coeffs = np.zeros(trunc, dtype=np.int64)
    coeffs[scale * args] = values % 2
    return Series(2, coeffs)


def prime_theta_series(
    trunc: int,
    p_modulus: int,
    families: Sequence[tuple[int, Optional[int]]],
    y_modulus: int = 18,
    tables: Optional[DivisorTables] = None,
) -> Series:
    """sum q^{p y^2} mod 2 com s_p(y) par, p == r (mod p_modulus) e y == +/-eps.

    eps = None aceita qualquer y.
    """
    tables = _tables_for(trunc, 1, tables)
    primes = tables.primes_upto(trunc - 1)
    coeffs = np.zeros(trunc, dtype=np.int64)
    for residue, eps in families:
        family = primes[primes % p_modulus == residue]
        y = 1
        while family.size and family[0] * y * y < trunc:
            if eps is None or y % y_modulus in {eps % y_modulus, (-eps) % y_modulus}:
                ps = family[family * y * y < trunc]
                rest = np.full(ps.size, y, dtype=np.int64)
                val = np.zeros(ps.size, dtype=np.int64)
                mask = rest % ps == 0
                while mask.any():
                    val += mask
                    rest = np.where(mask, rest // ps, rest)
                    mask = rest % ps == 0
                exps = ps[val % 2 == 0] * y * y
                np.add.at(coeffs, exps, 1)
            y += 1
    return Series(2, coeffs % 2)


def build_T16(trunc: int, tables: Optional[DivisorTables] = None) -> Series:
    if trunc < 32:
        raise DomainError(f"build_T16 exige trunc >= 32 (recebido {trunc})")
    tables = _tables_for(trunc, 1, tables)
    F = build_sigma_dissection(2, 1, False, 1, trunc, tables)
    G = build_sigma_dissection(8, 5, True, 1, trunc, tables)
    return series_add(series_mul(F, G), series_mul(substitute_power(F, 4), substitute_power(F, 2)))


def build_R36(trunc: int, tables: Optional[DivisorTables] = None) -> Series:
    started = time.perf_counter()
    tables = _tables_for(trunc, 1, tables)
    total = Series.zero(trunc, 2)
    for f_piece, g_piece in R36_PAIRS:
        F = build_sigma_dissection(f_piece.A, f_piece.B, f_piece.halve, f_piece.scale, trunc, tables)
        G = build_sigma_dissection(g_piece.A, g_piece.B, g_piece.halve, g_piece.scale, trunc, tables)
        total = series_add(total, series_mul(F, G))
    logger.info("R(q) ate %s em %.1f ms", trunc, (time.perf_counter() - started) * 1000)
    return total


def all_even_report(check_id: str, series: Series) -> CheckReport:
    return report_from_failures(
        check_id,
        f"trunc={series.trunc}",
        series.trunc - 1,
        [int(e) for e in series.support()],
        describe=lambda e: f"coeficiente impar em q^{e}",
    )


def r36_checks(trunc: int, parity_bound: int, tables: Optional[DivisorTables] = None) -> list[CheckReport]:
    """Paridade de R(q), suporte fora de 36j+30 e comparacao com rep_count."""
    tables = _tables_for(max(trunc, parity_bound + 1), 1, tables)
    R = build_R36(trunc, tables)
    reports = [all_even_report("R36-even", R)]

    off_support = [int(e) for e in R.support() if e % 36 != 30]
    reports.append(
        report_from_failures(
            "R36-support",
            f"trunc={trunc}",
            trunc - 1,
            off_support,
            describe=lambda e: f"q^{e} fora de 36j+30",
        )
    )

    limit = min(parity_bound, trunc - 1)
    mismatches = [
        n for n in range(30, limit + 1, 36) if R[n] != section36_parity(n, tables)
    ]
    reports.append(
        report_from_failures(
            "R36-rep-parity",
            f"trunc={trunc}",
            limit,
            mismatches,
            describe=lambda n: f"n={n} R={R[n]} rep={section36_parity(n, tables)}",
        )
    )
    return reports


def f_g_theta_parity_check(bound: int, tables: Optional[DivisorTables] = None) -> CheckReport:
    """F(q) == sum q^{(2n+1)^2} e G(q) == sum_{p==5 (8)} q^{p y^2} (mod 2) ate bound."""
    trunc = bound + 1
    tables = _tables_for(trunc, 1, tables)
    F = build_sigma_dissection(2, 1, False, 1, trunc, tables)
    G = build_sigma_dissection(8, 5, True, 1, trunc, tables)
    F_theta = theta_residue_series(2, 1, trunc)
    # y impar: p*y^2 com y par nao cai em 8n+5
    G_theta = prime_theta_series(trunc, 8, ((5, 1),), y_modulus=2, tables=tables)

    failures = [("F", int(e)) for e in np.flatnonzero(F.coeffs != F_theta.coeffs)]
    failures += [("G", int(e)) for e in np.flatnonzero(G.coeffs != G_theta.coeffs)]
    return report_from_failures(
        "F-G-theta",
        f"bound={bound}",
        bound,
        failures,
        describe=lambda f: f"{f[0]} difere em q^{f[1]}",
    )


def g_family_checks(trunc: int, tables: Optional[DivisorTables] = None) -> list[CheckReport]:
    """G_{y,k} (k = 29, 17, 5) contra a soma das tres familias (p, y)."""
    tables = _tables_for(trunc, 1, tables)
    reports = []
    for k, families in G_FAMILIES.items():
        G = build_sigma_dissection(36, k, True, 1, trunc, tables)
        theta = prime_theta_series(trunc, 36, families, tables=tables)
        diff = [int(e) for e in np.flatnonzero(G.coeffs != theta.coeffs)]
        reports.append(
            report_from_failures(
                f"G_y{k}-families",
                f"trunc={trunc}",
                trunc - 1,
                diff,
                describe=lambda e: f"difere em q^{e}",
            )
        )
    return reports
