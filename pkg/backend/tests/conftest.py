# backend/tests/conftest.py
"""Fixtures compartilhadas e a opcao --long."""

from __future__ import annotations

import pytest

from app.arith.divisors import build_divisor_tables
from app.partitions.nu import nu_table_dp
from app.partitions.overpartitions import overpartition_table


def pytest_addoption(parser: pytest.Parser) -> None:
    parser.addoption("--long", action="store_true", default=False, help="Roda tambem os testes marcados como long.")


def pytest_collection_modifyitems(config: pytest.Config, items: list[pytest.Item]) -> None:
    if config.getoption("--long"):
        return
    skip_long = pytest.mark.skip(reason="teste demorado; use --long")
    for item in items:
        if "long" in item.keywords:
            item.add_marker(skip_long)


@pytest.fixture(scope="session")
def tables():
    """Tabelas de divisores ate 2*10^4."""
    return build_divisor_tables(20_000)


@pytest.fixture(scope="session")
def small_tables():
    return build_divisor_tables(200)


@pytest.fixture(scope="session")
def nu_exact():
    """nu_k exato, k <= 3, ate 120."""
    return nu_table_dp(120, 3)


@pytest.fixture(scope="session")
def overpartitions_16():
    return overpartition_table(5_000, 16)
