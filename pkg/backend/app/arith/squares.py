# backend/app/arith/squares.py
"""
Quadrados, somas de dois quadrados e residuos atingidos por formas.
"""

from __future__ import annotations

from enum import Enum
from typing import Optional

from app.arith.divisors import DivisorTables
from app.arith.factor import divisor_count, factorize
from app.errors import DomainError


class QuadraticForm(str, Enum):
    SQUARE = "square"
    SUM_OF_TWO_SQUARES = "sum-of-two-squares"
    # 2n(3n+1): expoentes de f_4 pelo teorema pentagonal
    PENTAGONAL_DOUBLED = "generalized-pentagonal-doubled"


def is_sum_of_two_squares(n: int) -> bool:
    """Criterio de fatoracao: primos 3 (mod 4) com expoente par."""
    if n < 0:
        raise DomainError(f"is_sum_of_two_squares exige n >= 0 (recebido {n})")
    if n == 0:
        return True
    return all(e % 2 == 0 for p, e in factorize(n).factors if p % 4 == 3)


def attainable_residues(modulus: int, form: QuadraticForm | str) -> frozenset[int]:
    """Conjunto exato de residuos mod `modulus` atingidos pela forma.

    Polinomios com coeficientes inteiros sao periodicos mod `modulus`,
    entao basta varrer 0..modulus-1 (isso cobre argumentos negativos).
    """
    if modulus < 1:
        raise DomainError(f"modulus deve ser >= 1 (recebido {modulus})")
    try:
        kind = QuadraticForm(form)
    except ValueError as exc:
        raise DomainError(f"forma desconhecida: {form!r}") from exc

    squares = frozenset(x * x % modulus for x in range(modulus))
    if kind is QuadraticForm.SQUARE:
        return squares
    if kind is QuadraticForm.SUM_OF_TWO_SQUARES:
        return frozenset((a + b) % modulus for a in squares for b in squares)
    return frozenset(2 * x * (3 * x + 1) % modulus for x in range(modulus))


def check_d_half_square(n: int, tables: Optional[DivisorTables] = None) -> bool:
    """d(n) == d(n/2)^2 (mod 8) para n par."""
    if n < 2 or n % 2:
        raise DomainError(f"check_d_half_square exige n par positivo (recebido {n})")
    if tables is not None and n <= tables.bound:
        dn, dh = tables.d_of(n), tables.d_of(n // 2)
    else:
        dn, dh = divisor_count(n), divisor_count(n // 2)
    return (dn - dh * dh) % 8 == 0
