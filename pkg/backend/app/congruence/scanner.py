# backend/app/congruence/scanner.py
"""
Busca empirica de progressoes (A, B) com f(An+B) == 0 (mod m) ate um bound.

Cada candidato leva flags de condicao (sempre empiricas, ate o bound):
- sigma1_mod8: sigma_1(n) == 0 (mod 8) em todos os termos
- d_half_square: d(n) == d(n/2)^2 (mod 8) nos termos pares
- avoids_two_squares: B (mod A) fora dos residuos de x^2 + y^2 mod A
- nu2_mod4: nu_2 == 0 (mod 4) na mesma progressao (alvos nu_k, k >= 3)
"""

from __future__ import annotations

from concurrent.futures import ThreadPoolExecutor
from dataclasses import dataclass
import logging
import re
from typing import Optional, Sequence

import numpy as np

from app.arith.divisors import DivisorTables, build_divisor_tables
from app.arith.squares import QuadraticForm, attainable_residues
from app.config import settings
from app.congruence.accessors import build_accessor
from app.errors import DomainError, ResourceLimitError
from app.partitions.formulas import nu2_table_formula

logger = logging.getLogger(__name__)

TARGET_PATTERN = re.compile(r"^(?P<seq>nu(?P<k>[1-8])|overpartition)-mod(?P<mod>\d+|N)$")


@dataclass
class ScanCandidate:
    target: str
    A: int
    B: int
    modulus: int
    bound: int
    terms: int
    sigma1_mod8: bool
    d_half_square: bool
    avoids_two_squares: bool
    nu2_mod4: Optional[bool] = None
    primitive: bool = True

    @property
    def all_conditions(self) -> bool:
        flags = [self.sigma1_mod8, self.d_half_square, self.avoids_two_squares]
        if self.nu2_mod4 is not None:
            flags.append(self.nu2_mod4)
        return all(flags)

    def to_record(self) -> dict:
        return {
            "target": self.target,
            "A": self.A,
            "B": self.B,
            "modulus": self.modulus,
            "bound": self.bound,
            "terms": self.terms,
            "sigma1_mod8": self.sigma1_mod8,
            "d_half_square": self.d_half_square,
            "avoids_two_squares": self.avoids_two_squares,
            "nu2_mod4": self.nu2_mod4,
            "all_conditions": self.all_conditions,
        }


def parse_target(target: str, moduli: Optional[Sequence[int]] = None) -> list[tuple[str, str, int]]:
    """`nu2-mod4` -> [("nu2-mod4", "nu2", 4)]; `nu2-modN` expande `moduli`."""
    match = TARGET_PATTERN.match(target)
    if match is None:
        raise DomainError(f"alvo de busca desconhecido: {target!r}")
    seq = match.group("seq")
    if match.group("mod") == "N":
        if not moduli:
            raise DomainError(f"{target} exige uma lista de modulos (--moduli)")
        mods = list(moduli)
    else:
        mods = [int(match.group("mod"))]
    if any(m < 2 for m in mods):
        raise DomainError(f"modulos devem ser >= 2: {mods}")
    return [(f"{seq}-mod{m}", seq, m) for m in mods]


def _vanishing_classes(zero: np.ndarray, A: int) -> np.ndarray:
    """Classes B (mod A) em que `zero` vale em todos os n == B, 1 <= n <= bound."""
    size = zero.size
    rows = -(-size // A)
    padded = np.ones(rows * A, dtype=bool)
    padded[:size] = zero
    padded[0] = True  # n = 0 fora da progressao
    classes = padded.reshape(rows, A).all(axis=0)
    # B precisa ter ao menos um termo n >= 1
    has_terms = np.arange(A) <= size - 1
    has_terms[0] = A <= size - 1
    return np.flatnonzero(classes & has_terms)


def _mark_primitive(candidates: list[ScanCandidate]) -> None:
    found = {(c.target, c.A, c.B) for c in candidates}
    for c in candidates:
        c.primitive = not any(
            (c.target, a, c.B % a) in found for a in range(1, c.A) if c.A % a == 0
        )


def scan_progressions(
    amax: int,
    bound: int,
    target: str,
    moduli: Optional[Sequence[int]] = None,
    tables: Optional[DivisorTables] = None,
    threads: Optional[int] = None,
) -> list[ScanCandidate]:
    if amax < 1 or bound < 1:
        raise DomainError(f"amax e bound devem ser >= 1 (recebido {amax}, {bound})")
    if amax > settings.max_scan_amax:
        raise ResourceLimitError(f"amax={amax} excede CONGRUENCE_FORGE_MAX_SCAN_AMAX")

    tables = tables if tables is not None and tables.bound >= bound else build_divisor_tables(bound)
    sigma_zero = np.zeros(bound + 1, dtype=bool)
    sigma_zero[1:] = tables.sigma1[1 : bound + 1] % 8 == 0
    half_ok = np.ones(bound + 1, dtype=bool)
    evens = np.arange(2, bound + 1, 2)
    half_ok[evens] = (tables.d[evens] - tables.d[evens // 2] ** 2) % 8 == 0
    nu2 = nu2_table_formula(tables)[: bound + 1]
    nu2_zero = nu2 % 4 == 0

    candidates: list[ScanCandidate] = []
    for name, seq, modulus in parse_target(target, moduli):
        accessor = build_accessor(seq, bound, modulus, tables=tables)
        zero = accessor.values[: bound + 1] % modulus == 0

        def scan_a(A: int) -> list[ScanCandidate]:
            two_squares = attainable_residues(A, QuadraticForm.SUM_OF_TWO_SQUARES)
            found = []
            for B in _vanishing_classes(zero, A):
                B = int(B)
                ns = np.arange(B if B else A, bound + 1, A)
                found.append(
                    ScanCandidate(
                        target=name,
                        A=A,
                        B=B,
                        modulus=modulus,
                        bound=bound,
                        terms=int(ns.size),
                        sigma1_mod8=bool(sigma_zero[ns].all()),
                        d_half_square=bool(half_ok[ns].all()),
                        avoids_two_squares=B not in two_squares,
                        nu2_mod4=bool(nu2_zero[ns].all()) if seq not in ("nu1", "nu2") else None,
                    )
                )
            return found

        with ThreadPoolExecutor(max_workers=threads or settings.threads) as pool:
            for chunk in pool.map(scan_a, range(1, amax + 1)):
                candidates.extend(chunk)

    candidates.sort(key=lambda c: (c.target, c.A, c.B))
    _mark_primitive(candidates)
    for c in candidates:
        if not c.all_conditions:
            logger.warning(
                "Candidato (%s, %s) em %s viola condicoes: sigma1=%s d_half=%s two_squares=%s nu2=%s",
                c.A, c.B, c.target, c.sigma1_mod8, c.d_half_square, c.avoids_two_squares, c.nu2_mod4,
            )
    logger.info("Busca %s: %s candidatos (amax=%s, bound=%s)", target, len(candidates), amax, bound)
    return candidates
