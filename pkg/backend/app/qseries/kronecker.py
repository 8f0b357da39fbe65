# backend/app/qseries/kronecker.py
"""
Convolucao por substituicao de Kronecker.

Cada coeficiente ocupa um "slot" de bytes dentro de um unico inteiro
Python; o produto dos dois inteiros contem, slot a slot, os coeficientes
do produto de Cauchy. O slot e largo o bastante para a soma maxima, entao
nao ha vazamento entre vizinhos.

Operandos esparsos (fatores eta, series theta) usam acumulacao deslocada.
"""

from __future__ import annotations

from math import isqrt

import numpy as np

from app.errors import ConsistencyError, DomainError

MAX_MODULUS = 2**31


def _slot_bytes(length: int, max_a: int, max_b: int) -> int:
    bound = max(1, length * max(max_a, 1) * max(max_b, 1))
    return max(1, (bound.bit_length() + 7) // 8)


def _pack(values: np.ndarray, slot: int) -> int:
    raw = np.ascontiguousarray(values, dtype="<u8").view(np.uint8).reshape(-1, 8)
    if slot <= 8:
        buf = raw[:, :slot]
    else:
        buf = np.zeros((raw.shape[0], slot), dtype=np.uint8)
        buf[:, :8] = raw
    return int.from_bytes(np.ascontiguousarray(buf).tobytes(), "little")


def _slots(value: int, count: int, slot: int) -> np.ndarray:
    width = count * slot
    value &= (1 << (8 * width)) - 1
    raw = np.frombuffer(value.to_bytes(width, "little"), dtype=np.uint8)
    return raw.reshape(count, slot)


def _unpack_mod(value: int, count: int, slot: int, modulus: int) -> np.ndarray:
    slots = _slots(value, count, slot).astype(np.int64)
    acc = np.zeros(count, dtype=np.int64)
    # Horner do byte mais significativo para o menos
    for col in range(slot - 1, -1, -1):
        acc = (acc * 256 + slots[:, col]) % modulus
    return acc


def _unpack_exact(value: int, count: int, slot: int) -> np.ndarray:
    slots = _slots(value, count, slot)
    if slot > 8 and slots[:, 8:].any():
        raise ConsistencyError("coeficiente do produto excede 64 bits")
    low = np.zeros((count, 8), dtype=np.uint8)
    low[:, : min(slot, 8)] = slots[:, : min(slot, 8)]
    out = low.view("<u8").reshape(count)
    if (out >> np.uint64(63)).any():
        raise ConsistencyError("coeficiente do produto excede int64")
    return out.astype(np.int64)


def sparse_threshold(trunc: int) -> int:
    return max(64, 2 * isqrt(trunc))


def convolve_sparse(
    sparse: np.ndarray,
    dense: np.ndarray,
    trunc: int,
    modulus: int | None,
) -> np.ndarray:
    """Produto por acumulacao deslocada sobre os termos nao nulos de `sparse`."""
    out = np.zeros(trunc, dtype=np.int64)
    dense = dense[:trunc]
    for e in np.flatnonzero(sparse[:trunc]):
        e = int(e)
        span = min(trunc - e, dense.shape[0])
        if span <= 0:
            continue
        out[e : e + span] += int(sparse[e]) * dense[:span]
        if modulus is not None:
            out[e : e + span] %= modulus
    return out


def convolve_mod(a: np.ndarray, b: np.ndarray, trunc: int, modulus: int) -> np.ndarray:
    """Coeficientes 0..trunc-1 de a*b mod `modulus` (residuos em [0, modulus))."""
    if not 2 <= modulus <= MAX_MODULUS:
        raise DomainError(f"modulo fora de [2, 2^31]: {modulus}")
    a = np.asarray(a[:trunc], dtype=np.int64)
    b = np.asarray(b[:trunc], dtype=np.int64)
    if a.size == 0 or b.size == 0:
        return np.zeros(trunc, dtype=np.int64)

    limit = sparse_threshold(trunc)
    nnz_a, nnz_b = np.count_nonzero(a), np.count_nonzero(b)
    if min(nnz_a, nnz_b) <= limit:
        sparse, dense = (a, b) if nnz_a <= nnz_b else (b, a)
        return convolve_sparse(sparse, dense, trunc, modulus)

    slot = _slot_bytes(min(a.size, b.size), modulus - 1, modulus - 1)
    product = _pack(a, slot) * _pack(b, slot)
    count = min(trunc, a.size + b.size - 1)
    out = np.zeros(trunc, dtype=np.int64)
    out[:count] = _unpack_mod(product, count, slot, modulus)
    return out


def convolve_exact(a: np.ndarray, b: np.ndarray, trunc: int | None = None) -> np.ndarray:
    """Produto de Cauchy exato de sequencias inteiras nao negativas (int64)."""
    a = np.asarray(a, dtype=np.int64)
    b = np.asarray(b, dtype=np.int64)
    if trunc is None:
        trunc = a.size + b.size - 1
    a, b = a[:trunc], b[:trunc]
    if (a < 0).any() or (b < 0).any():
        raise DomainError("convolve_exact aceita apenas coeficientes nao negativos")
    out = np.zeros(trunc, dtype=np.int64)
    if a.size == 0 or b.size == 0:
        return out

    slot = _slot_bytes(min(a.size, b.size), int(a.max()), int(b.max()))
    product = _pack(a, slot) * _pack(b, slot)
    count = min(trunc, a.size + b.size - 1)
    out[:count] = _unpack_exact(product, count, slot)
    return out
