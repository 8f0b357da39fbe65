# backend/app/partitions/nu.py
"""
nu_k(n): particoes de n com exatamente k tamanhos de parte distintos.

Dois caminhos independentes:
- nu_bruteforce: enumera todas as particoes (sympy) e conta tamanhos
- nu_table_dp: programacao dinamica sobre os tamanhos de parte
"""

from __future__ import annotations

from dataclasses import dataclass
from functools import lru_cache
import logging
import time
from typing import Optional

import numpy as np
from sympy.utilities.iterables import partitions

from app.config import settings
from app.errors import DomainError, ResourceLimitError

logger = logging.getLogger(__name__)

# Modo exato usa inteiros Python (dtype object); acima disso use um modulo.
EXACT_DP_MAX_BOUND = 400


@lru_cache(maxsize=None)
def _sizes_histogram(n: int) -> tuple[int, ...]:
    """hist[k] = numero de particoes de n com k tamanhos distintos."""
    hist: dict[int, int] = {}
    # `partitions` reutiliza o mesmo dict entre iteracoes; so lemos len()
    for part in partitions(n):
        hist[len(part)] = hist.get(len(part), 0) + 1
    top = max(hist)
    return tuple(hist.get(k, 0) for k in range(top + 1))


def nu_bruteforce(n: int, k: int, cap: Optional[int] = None) -> int:
    if n < 1 or k < 1:
        raise DomainError(f"nu_bruteforce exige n, k >= 1 (recebido n={n}, k={k})")
    cap = settings.bruteforce_cap if cap is None else cap
    if n > cap:
        raise ResourceLimitError(f"n={n} acima do limite de forca bruta ({cap})")
    hist = _sizes_histogram(n)
    return hist[k] if k < len(hist) else 0


def max_feasible_k(n: int) -> int:
    """Maior k com 1 + 2 + ... + k <= n."""
    k = 0
    while (k + 1) * (k + 2) // 2 <= n:
        k += 1
    return k


@dataclass(frozen=True, eq=False)
class NuTable:
    """values[k, n] = nu_k(n) (mod modulus, ou exato se modulus for None)."""

    bound: int
    kmax: int
    modulus: Optional[int]
    values: np.ndarray

    def __post_init__(self) -> None:
        if self.bound < 1 or self.kmax < 1:
            raise DomainError("NuTable exige bound, kmax >= 1")
        if self.values.shape != (self.kmax + 1, self.bound + 1):
            raise DomainError("NuTable com formato inconsistente")
        self.values.setflags(write=False)

    def value(self, n: int, k: int) -> int:
        if not 1 <= n <= self.bound:
            raise DomainError(f"n={n} fora de [1, {self.bound}]")
        if not 1 <= k <= self.kmax:
            raise DomainError(f"k={k} fora de [1, {self.kmax}]")
        return int(self.values[k, n])

    def column(self, k: int) -> np.ndarray:
        """nu_k(n) para n = 0..bound (nu_k(0) = 0 para k >= 1)."""
        if not 1 <= k <= self.kmax:
            raise DomainError(f"k={k} fora de [1, {self.kmax}]")
        return self.values[k]

    def records(self) -> list[dict[str, int]]:
        """Linhas n, k, value para exportacao."""
        return [
            {"n": n, "k": k, "value": int(self.values[k, n])}
            for n in range(1, self.bound + 1)
            for k in range(1, self.kmax + 1)
        ]


def nu_table_dp(bound: int, kmax: int, modulus: Optional[int] = None) -> NuTable:
    """DP: para cada tamanho s, nu[c][m] += sum_{t>=1} nu_antigo[c-1][m - t*s].

    O somatorio em t e uma soma acumulada com passo s; c desce de kmax a 1
    para que nu[c-1] ainda represente o estado antes de s.
    """
    if bound < 1 or kmax < 1:
        raise DomainError(f"nu_table_dp exige bound, kmax >= 1 (recebido {bound}, {kmax})")
    if modulus is not None and not 2 <= modulus <= 2**31:
        raise DomainError(f"modulo fora de [2, 2^31]: {modulus}")
    cells = (kmax + 1) * (bound + 1)
    if cells > settings.max_dp_cells:
        raise ResourceLimitError(
            f"DP com {cells} celulas excede CONGRUENCE_FORGE_MAX_DP_CELLS={settings.max_dp_cells}"
        )
    if modulus is None and bound > EXACT_DP_MAX_BOUND:
        raise ResourceLimitError(
            f"DP exata limitada a bound <= {EXACT_DP_MAX_BOUND}; informe um modulo"
        )

    started = time.perf_counter()
    dtype = object if modulus is None else np.int64
    table = np.zeros((kmax + 1, bound + 1), dtype=dtype)
    table[0, 0] = 1
    top = min(kmax, max_feasible_k(bound))

    for s in range(1, bound + 1):
        span = bound + 1 - s
        rows = -(-span // s)
        for c in range(top, 0, -1):
            previous = table[c - 1, :span]
            if not previous.any():
                continue
            # summed[r] = sum_{t>=0} previous[r - t*s], somado em m = r + s
            padded = np.zeros(rows * s, dtype=dtype)
            padded[:span] = previous
            summed = padded.reshape(rows, s).cumsum(axis=0).reshape(-1)[:span]
            if modulus is not None:
                table[c, s:] = (table[c, s:] + summed) % modulus
            else:
                table[c, s:] = table[c, s:] + summed

    logger.debug(
        "nu_table_dp bound=%s kmax=%s modulus=%s em %.1f ms",
        bound,
        kmax,
        modulus,
        (time.perf_counter() - started) * 1000,
    )
    return NuTable(bound=bound, kmax=kmax, modulus=modulus, values=table)
