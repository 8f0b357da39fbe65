# backend/app/main.py
"""
Ponto de entrada do app.

Exemplos:
  cd backend
  python -m app.main verify --preset thm-16-14 --bound 20000
  python -m app.main dissect --check lemma-3 --trunc 2000
  python -m app.main sturm 4 46656 --factor 3
  python -m app.main scan --target nu2-mod4 --amax 40 --bound 5000
  python -m app.main oracle --bruteforce-cap 40

Codigos de saida: 0 pass, 1 contraexemplo, 2 uso/recurso.
"""

from __future__ import annotations

import argparse
import logging
import time
from typing import Callable, Optional, Sequence

from app.config import settings
from app.errors import ConsistencyError, DomainError, ResourceLimitError
from app.exporters.reports import elapsed_trailer, export_nu_table, render_records, write_report
from app.logging_setup import setup_logging
from app.orchestration.presets import PRESETS
from app.orchestration.run_config import OUTPUT_FORMATS, RunConfig, build_run_config, parse_progression
from app.orchestration.run_dissect import CHECKS, run_dissect
from app.orchestration.run_oracle import run_oracle
from app.orchestration.run_scan import parse_moduli, run_scan
from app.orchestration.run_sturm import progression_sturm_bounds, run_sturm
from app.orchestration.run_verify import run_verify
from app.partitions.nu import nu_table_dp

EXIT_PASS = 0
EXIT_COUNTEREXAMPLE = 1
EXIT_USAGE = 2

logger = logging.getLogger("app")


def _positive_int(text: str) -> int:
    value = int(text.replace("_", ""))
    if value < 1:
        raise argparse.ArgumentTypeError(f"esperado inteiro positivo (recebido {text})")
    return value


def build_parser() -> argparse.ArgumentParser:
    """Parser com um subcomando por fluxo de orchestration."""
    common = argparse.ArgumentParser(add_help=False)
    common.add_argument("--config", help="Arquivo key=value (bound, trunc, modulus, ...).")
    common.add_argument("--format", dest="output_format", choices=OUTPUT_FORMATS, help="Formato do relatorio.")
    common.add_argument("--output", dest="output_path", help="Grava o relatorio neste arquivo.")
    common.add_argument("--log-level", default=None, help="Nivel de log (padrao: CONGRUENCE_FORGE_LOG_LEVEL).")
    common.add_argument("--bound", type=_positive_int, help="Maior n conferido.")
    common.add_argument("--trunc", type=_positive_int, help="Truncamento das series.")
    common.add_argument("--long", dest="long_tests", action="store_true", default=None, help="Libera checks demorados.")

    parser = argparse.ArgumentParser(prog="congruence-forge")
    sub = parser.add_subparsers(dest="command", required=True)

    verify = sub.add_parser("verify", parents=[common], help="Confere f(An+B) == 0 (mod m).")
    verify.add_argument("--preset", choices=sorted(PRESETS))
    verify.add_argument("--progression", type=parse_progression, help="A,B")
    verify.add_argument("--target", choices=["nu1", "nu2", "nu3", "overpartition"])
    verify.add_argument("--modulus", type=int)
    verify.add_argument("--backend", choices=["formula", "dp", "series"])

    dissect = sub.add_parser("dissect", parents=[common], help="Identidades de series e paridade de R/T.")
    dissect.add_argument("--check", required=True, choices=list(CHECKS))

    sturm = sub.add_parser("sturm", parents=[common], help="Limite de Sturm.")
    sturm.add_argument("weight", type=_positive_int)
    sturm.add_argument("level", type=_positive_int)
    sturm.add_argument("--factor", type=_positive_int, default=1)
    sturm.add_argument(
        "--progressions",
        action="store_true",
        help="Um limite por progressao (A e o fator de indice conhecido), em linhas 'A limite'.",
    )

    scan = sub.add_parser("scan", parents=[common], help="Busca progressoes candidatas.")
    scan.add_argument("--target", required=True, help="nu2-mod4, nu3-mod2, overpartition-mod16, nuK-modN, nu2-modN")
    scan.add_argument("--amax", type=_positive_int, default=40)
    scan.add_argument("--moduli", help="Lista para alvos -modN, ex. 3,5,7")
    scan.add_argument("--primitive-only", action="store_true")

    oracle = sub.add_parser("oracle", parents=[common], help="Concordancia entre backends de nu_k.")
    oracle.add_argument("--bruteforce-cap", type=_positive_int)
    oracle.add_argument("--export-table", action="store_true", help="Exporta a tabela exata de nu_k (k <= 3) em CSV.")

    return parser


def _config_for(args: argparse.Namespace, default_modulus: int = 2) -> RunConfig:
    flags = {
        "bound": args.bound,
        "trunc": args.trunc,
        "modulus": getattr(args, "modulus", None),
        "long_tests": args.long_tests,
        "output_format": args.output_format,
        "output_path": args.output_path,
        "bruteforce_cap": getattr(args, "bruteforce_cap", None),
        "progression": getattr(args, "progression", None),
    }
    return build_run_config(args.command, flags, args.config, default_modulus=default_modulus)


def _emit_checks(reports, config: RunConfig, started: float) -> int:
    body = render_records([r.to_record() for r in reports], "checks", config.output_format)
    timings = [(r.check_id, r.elapsed_ms) for r in reports if r.elapsed_ms is not None]
    timings.append(("total", (time.perf_counter() - started) * 1000))
    write_report(body + elapsed_trailer(timings), config.output_path)
    return EXIT_PASS if all(r.passed for r in reports) else EXIT_COUNTEREXAMPLE


def cmd_verify(args: argparse.Namespace) -> int:
    started = time.perf_counter()
    default_modulus = {"nu1": 8, "nu2": 4, "nu3": 2, "overpartition": 16}.get(args.target or "", 2)
    config = _config_for(args, default_modulus)
    reports = run_verify(config, preset=args.preset, target=args.target, backend=args.backend)
    return _emit_checks(reports, config, started)


def cmd_dissect(args: argparse.Namespace) -> int:
    started = time.perf_counter()
    config = _config_for(args)
    return _emit_checks(run_dissect(config, args.check), config, started)


def cmd_sturm(args: argparse.Namespace) -> int:
    config = _config_for(args)
    if args.progressions:
        bounds = progression_sturm_bounds(args.weight, args.level)
        report = "".join(f"{A} {bound}\n" for A, bound in bounds.items())
    else:
        report = f"{run_sturm(args.weight, args.level, args.factor)}\n"
    write_report(report, config.output_path)
    return EXIT_PASS


def cmd_scan(args: argparse.Namespace) -> int:
    started = time.perf_counter()
    config = _config_for(args)
    candidates = run_scan(config, args.target, args.amax, parse_moduli(args.moduli), args.primitive_only)
    body = render_records([c.to_record() for c in candidates], "scan_candidates", config.output_format)
    trailer = elapsed_trailer([("scan", (time.perf_counter() - started) * 1000)])
    write_report(body + trailer, config.output_path)
    return EXIT_PASS


def cmd_oracle(args: argparse.Namespace) -> int:
    started = time.perf_counter()
    config = _config_for(args)
    reports = run_oracle(config)
    if args.export_table:
        path = export_nu_table(nu_table_dp(120, 3))
        logger.info("Tabela nu_k exportada -> %s", path)
    return _emit_checks(reports, config, started)


COMMANDS: dict[str, Callable[[argparse.Namespace], int]] = {
    "verify": cmd_verify,
    "dissect": cmd_dissect,
    "sturm": cmd_sturm,
    "scan": cmd_scan,
    "oracle": cmd_oracle,
}


def main(argv: Optional[Sequence[str]] = None) -> int:
    """Inicializa logging e executa o subcomando selecionado."""
    args = build_parser().parse_args(argv)
    setup_logging(args.log_level or settings.log_level)

    logger.info("Iniciando app no modo: %s", args.command)
    try:
        return COMMANDS[args.command](args)
    except ConsistencyError as exc:
        logger.error("Inconsistencia entre backends: %s", exc)
        return EXIT_COUNTEREXAMPLE
    except (DomainError, ResourceLimitError, FileNotFoundError) as exc:
        logger.error("%s: %s", type(exc).__name__, exc)
        return EXIT_USAGE


if __name__ == "__main__":
    raise SystemExit(main())
