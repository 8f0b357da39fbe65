# backend/app/arith/factor.py
"""
Fatoracao por divisao de tentativa e funcoes derivadas.

- factorize: roda 2, 3 e depois 6k +/- 1 ate sqrt(n)
- prime_valuation: s_p(y), maior e com p^e | y
- odd_order_prime_count: quantos primos aparecem com expoente impar
- divisor_count / divisor_sigma: oraculos por entrada (nao o caminho de producao)
"""

from __future__ import annotations

from dataclasses import dataclass
from math import prod

from sympy import isprime

from app.errors import DomainError


@dataclass(frozen=True)
class Factorization:
    """n = prod(p ** e) com primos estritamente crescentes."""

    n: int
    factors: tuple[tuple[int, int], ...]

    def __post_init__(self) -> None:
        if self.n < 1:
            raise DomainError(f"fatoracao exige n >= 1 (recebido {self.n})")
        previous = 1
        for p, e in self.factors:
            if p <= previous or e < 1:
                raise DomainError(f"fatores invalidos para n={self.n}: {self.factors}")
            previous = p
        if prod(p**e for p, e in self.factors) != self.n:
            raise DomainError(f"produto dos fatores difere de n={self.n}")

    @property
    def primes(self) -> tuple[int, ...]:
        return tuple(p for p, _ in self.factors)

    def exponent(self, p: int) -> int:
        for prime, e in self.factors:
            if prime == p:
                return e
        return 0


def _strip(n: int, p: int) -> tuple[int, int]:
    count = 0
    while n % p == 0:
        n //= p
        count += 1
    return n, count


def factorize(n: int) -> Factorization:
    """Fatora n >= 1 por divisao de tentativa (n = 1 devolve lista vazia)."""
    if n < 1:
        raise DomainError(f"factorize exige n >= 1 (recebido {n})")

    factors: list[tuple[int, int]] = []
    rest = n
    for p in (2, 3):
        rest, c = _strip(rest, p)
        if c:
            factors.append((p, c))

    i = 5
    while i * i <= rest:
        for p in (i, i + 2):
            rest, c = _strip(rest, p)
            if c:
                factors.append((p, c))
        i += 6
    if rest > 1:
        factors.append((rest, 1))

    return Factorization(n=n, factors=tuple(factors))


def prime_valuation(p: int, y: int) -> int:
    """s_p(y): expoente de p na fatoracao de y."""
    if not isprime(p):
        raise DomainError(f"{p} nao e primo")
    if y < 1:
        raise DomainError(f"prime_valuation exige y >= 1 (recebido {y})")
    return _strip(y, p)[1]


def odd_order_prime_count(n: int) -> int:
    return sum(1 for _, e in factorize(n).factors if e % 2 == 1)


def divisor_count(n: int) -> int:
    """d(n) = prod(e + 1)."""
    return prod(e + 1 for _, e in factorize(n).factors)


def divisor_sigma(n: int, k: int = 1) -> int:
    """sigma_k(n) pela formula multiplicativa (k >= 1)."""
    total = 1
    for p, e in factorize(n).factors:
        pk = p**k
        total *= (pk ** (e + 1) - 1) // (pk - 1)
    return total
