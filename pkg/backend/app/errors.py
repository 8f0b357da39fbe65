# backend/app/errors.py
"""
Excecoes do projeto.

- DomainError: entrada fora do dominio (n = 0, p nao primo, B >= A, ...)
- ResourceLimitError: limite configurado em Settings excedido
- ConsistencyError: identidade interna violada (ex.: formula de nu_3 nao inteira)
"""


class DomainError(ValueError):
    """Erro levantado quando uma pre-condicao matematica nao vale."""


class ResourceLimitError(RuntimeError):
    """Erro levantado quando um limite de recursos e excedido."""


class ConsistencyError(RuntimeError):
    """Erro levantado quando dois caminhos de calculo discordam."""
