# backend/tests/test_config.py
from __future__ import annotations

import pytest

from app.config import Settings, _apply_env_files, _env_int, load_config_file, settings
from app.errors import DomainError
from app.orchestration.presets import PRESETS, get_preset
from app.orchestration.run_config import RunConfig, build_run_config, parse_progression

EMPTY_FLAGS = {"bound": None, "trunc": None, "modulus": None, "output_format": None}


def test_env_int_reads_environment(monkeypatch):
    monkeypatch.setenv("CONGRUENCE_FORGE_TEST_INT", "1_000")
    assert _env_int("TEST_INT", 5) == 1000
    monkeypatch.setenv("CONGRUENCE_FORGE_TEST_INT", "")
    assert _env_int("TEST_INT", 5) == 5


def test_apply_env_files_fills_missing_keys(monkeypatch, tmp_path):
    env = tmp_path / ".env"
    env.write_text("CONGRUENCE_FORGE_TEST_FILE=7\nCONGRUENCE_FORGE_TEST_SET=9\n")
    monkeypatch.delenv("CONGRUENCE_FORGE_TEST_FILE", raising=False)
    monkeypatch.setenv("CONGRUENCE_FORGE_TEST_SET", "3")
    _apply_env_files((env, tmp_path / "ausente.env"))
    assert _env_int("TEST_FILE", 0) == 7
    assert _env_int("TEST_SET", 0) == 3


def test_default_settings_have_positive_limits():
    assert Settings().threads >= 1
    assert settings.max_series_trunc > 0


def test_load_config_file(tmp_path):
    path = tmp_path / "run.cfg"
    path.write_text("BOUND=500\ntrunc=300\noutput_path=\n# comentario\n")
    assert load_config_file(path) == {"bound": "500", "trunc": "300"}
    with pytest.raises(FileNotFoundError):
        load_config_file(tmp_path / "missing.cfg")


def test_precedence_flags_over_file_over_settings(tmp_path):
    path = tmp_path / "run.cfg"
    path.write_text("bound=500\ntrunc=300\noutput_format=csv\nlong_tests=true\n")
    config = build_run_config("dissect", {**EMPTY_FLAGS, "trunc": 40}, str(path))
    assert config.bound == 500
    assert config.trunc == 40
    assert config.output_format == "csv"
    assert config.long_tests is True

    plain = build_run_config("dissect", EMPTY_FLAGS)
    assert plain.bound == settings.default_bound
    assert plain.trunc == settings.default_trunc


def test_unknown_config_keys_are_rejected(tmp_path):
    path = tmp_path / "run.cfg"
    path.write_text("bonud=500\n")
    with pytest.raises(DomainError):
        build_run_config("verify", EMPTY_FLAGS, str(path))


def test_run_config_invariants():
    with pytest.raises(DomainError):
        RunConfig("verify", bound=0, trunc=1)
    with pytest.raises(DomainError):
        RunConfig("verify", bound=1, trunc=1, modulus=1)
    with pytest.raises(DomainError):
        RunConfig("verify", bound=1, trunc=1, output_format="xml")
    with pytest.raises(DomainError):
        RunConfig("verify", bound=1, trunc=1, progression=(36, 36))


def test_parse_progression():
    assert parse_progression("36,30") == (36, 30)
    assert parse_progression(" 16 , 14 ") == (16, 14)
    with pytest.raises(DomainError):
        parse_progression("36")


def test_presets():
    assert set(PRESETS) >= {"thm-nu2", "thm-nu3", "thm-op16", "thm-16-14", "kim-mod8"}
    assert get_preset("thm-16-14").progressions == ((16, 14),)
    assert get_preset("thm-op16").modulus == 16
    with pytest.raises(DomainError):
        get_preset("thm-unknown")
