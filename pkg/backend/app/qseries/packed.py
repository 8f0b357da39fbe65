# backend/app/qseries/packed.py
"""
Caminho rapido mod 2: coeficientes empacotados em bits de um int Python.

Multiplicacao sem carry (como em GF(2)[x]): para cada bit ligado do
operando mais esparso, XOR do outro operando deslocado.
"""

from __future__ import annotations

import numpy as np


def pack_bits(coeffs: np.ndarray) -> int:
    bits = (np.asarray(coeffs) & 1).astype(np.uint8)
    packed = np.packbits(bits, bitorder="little")
    return int.from_bytes(packed.tobytes(), "little")


def unpack_bits(value: int, trunc: int) -> np.ndarray:
    nbytes = (trunc + 7) // 8
    value &= (1 << trunc) - 1
    raw = np.frombuffer(value.to_bytes(nbytes, "little"), dtype=np.uint8)
    return np.unpackbits(raw, bitorder="little")[:trunc].astype(np.int64)


def clmul_truncated(a: np.ndarray, b: np.ndarray, trunc: int) -> np.ndarray:
    """Coeficientes 0..trunc-1 de a*b sobre GF(2)."""
    a = np.asarray(a[:trunc]) & 1
    b = np.asarray(b[:trunc]) & 1
    if np.count_nonzero(a) > np.count_nonzero(b):
        a, b = b, a

    word = pack_bits(b)
    acc = 0
    for e in np.flatnonzero(a):
        acc ^= word << int(e)
    return unpack_bits(acc, trunc)
