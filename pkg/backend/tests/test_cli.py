# backend/tests/test_cli.py
from __future__ import annotations

from functools import partial
import json

import pytest

import app.main as cli
from app.exporters.reports import strip_trailer
from app.orchestration.run_oracle import run_oracle
from app.partitions.nu import NuTable, nu_table_dp


def run(capsys, *argv):
    code = cli.main(list(argv))
    return code, capsys.readouterr().out


@pytest.mark.parametrize(
    "argv, expected",
    [(["4", "64"], "32"), (["4", "46656"], "31104"), (["4", "46656", "--factor", "3"], "93312")],
)
def test_sturm(capsys, argv, expected):
    code, out = run(capsys, "sturm", *argv)
    assert code == 0
    assert out.strip() == expected


def test_sturm_rejects_zero():
    with pytest.raises(SystemExit) as exc:
        cli.main(["sturm", "0", "64"])
    assert exc.value.code == 2


def test_sturm_progressions(capsys):
    code, out = run(capsys, "sturm", "4", "46656", "--progressions")
    assert code == 0
    assert out.splitlines() == ["36 93312", "72 186624", "196 653184", "252 279936"]


def test_verify_preset_16_14(capsys):
    code, out = run(capsys, "verify", "--preset", "thm-16-14", "--bound", "20000", "--format", "csv")
    assert code == 0
    assert "nu2-16-14-mod4" in out
    assert ",pass," in out
    assert out.splitlines()[-1].startswith("# elapsed_ms")


def test_verify_progression(capsys):
    code, _ = run(capsys, "verify", "--progression", "36,30", "--target", "nu2", "--modulus", "4", "--bound", "5000")
    assert code == 0


def test_verify_counterexample_exits_1(capsys):
    code, out = run(capsys, "verify", "--progression", "2,1", "--target", "nu2", "--modulus", "4", "--bound", "100")
    assert code == 1
    assert "n=3 value=1" in out


def test_verify_usage_errors(capsys):
    assert run(capsys, "verify", "--bound", "100")[0] == 2
    assert run(capsys, "verify", "--progression", "36,30", "--bound", "100")[0] == 2
    with pytest.raises(SystemExit) as exc:
        cli.main(["verify", "--preset", "thm-unknown"])
    assert exc.value.code == 2


def test_verify_kim_preset(capsys):
    code, out = run(capsys, "verify", "--preset", "kim-mod8", "--bound", "2000")
    assert code == 0
    assert "kim-mod8" in out
    assert "kim-parity" in out


def test_verify_is_deterministic(capsys):
    argv = ["verify", "--preset", "thm-nu2", "--bound", "3000", "--format", "csv"]
    first = run(capsys, *argv)[1]
    second = run(capsys, *argv)[1]
    assert strip_trailer(first) == strip_trailer(second)
    rows = strip_trailer(first).splitlines()[1:]
    assert [row.split(",")[0] for row in rows] == [
        "nu2-36-30-mod4", "nu2-72-42-mod4", "nu2-196-70-mod4", "nu2-252-114-mod4",
    ]


def test_dissect_lemma(capsys):
    code, out = run(capsys, "dissect", "--check", "lemma-3", "--trunc", "2000")
    assert code == 0
    assert strip_trailer(out).count("lemma-3") == 2
    timings = out.splitlines()[-1].split()[2:]
    assert [t.split("=")[0].startswith("lemma-3") for t in timings] == [True, True, False]
    assert timings[-1].startswith("total=")


def test_dissect_minimum_trunc(capsys):
    assert run(capsys, "dissect", "--check", "T16", "--trunc", "10")[0] == 2


def test_dissect_long_gate(capsys):
    assert run(capsys, "dissect", "--check", "R36", "--trunc", "20000")[0] == 2


def test_dissect_op_chain(capsys):
    code, out = run(capsys, "dissect", "--check", "op-chain", "--trunc", "300", "--format", "jsonl")
    assert code == 0
    rows = [json.loads(line) for line in out.splitlines() if not line.startswith("#")]
    assert len(rows) == 8
    assert {row["status"] for row in rows} == {"pass"}


def test_scan_csv(capsys):
    code, out = run(capsys, "scan", "--target", "nu2-mod4", "--amax", "40", "--bound", "5000", "--format", "csv")
    assert code == 0
    lines = out.splitlines()
    assert lines[0].endswith("all_conditions")
    assert any(line.startswith("nu2-mod4,16,14,4,5000,") for line in lines)
    assert any(line.startswith("nu2-mod4,36,30,4,5000,") for line in lines)


def test_scan_resource_limit(capsys):
    assert run(capsys, "scan", "--target", "nu2-mod4", "--amax", "100000", "--bound", "100")[0] == 2


def test_bad_moduli_is_usage_error(capsys):
    assert run(capsys, "scan", "--target", "nu2-modN", "--moduli", "3,x", "--bound", "100")[0] == 2


def test_internal_value_error_is_not_usage_error(capsys, monkeypatch):
    def broken(*args, **kwargs):
        raise ValueError("operands could not be broadcast together")

    monkeypatch.setattr(cli, "run_sturm", broken)
    with pytest.raises(ValueError):
        cli.main(["sturm", "4", "64"])


def test_oracle_passes(capsys):
    code, out = run(capsys, "oracle", "--bruteforce-cap", "20")
    assert code == 0
    assert "oracle-overpartition" in out


def test_oracle_rejects_bruteforce_cap_above_limit(capsys):
    code, out = run(capsys, "oracle", "--bruteforce-cap", "110")
    assert code == 2
    assert out == ""


def test_oracle_fault_injection(capsys, monkeypatch):
    good = nu_table_dp(120, 2)
    values = good.values.copy()
    values[2, 40] += 1
    corrupted = NuTable(bound=120, kmax=2, modulus=None, values=values)
    monkeypatch.setattr(cli, "run_oracle", partial(run_oracle, dp_tables={2: corrupted}))
    code, out = run(capsys, "oracle", "--bruteforce-cap", "20")
    assert code == 1
    assert "n=40 k=2" in out


def test_output_file(tmp_path, capsys):
    target = tmp_path / "reports" / "sturm.txt"
    code, out = run(capsys, "sturm", "4", "64", "--output", str(target))
    assert code == 0
    assert out == ""
    assert target.read_text() == "32\n"


def test_config_file_sets_bound(tmp_path, capsys):
    cfg = tmp_path / "run.cfg"
    cfg.write_text("bound=100\noutput_format=csv\n")
    code, out = run(capsys, "verify", "--progression", "2,1", "--target", "nu2", "--config", str(cfg))
    assert code == 1
    assert out.splitlines()[0] == "check_id,params,bound,status,counterexample"
    assert ",100,fail," in out
