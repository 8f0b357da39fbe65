# backend/app/congruence/checks.py
"""
Registro de resultado de uma verificacao (um por check).

O payload segue o schema "checks"; elapsed_ms fica fora do payload e vai
para a linha de trailer do relatorio.
"""

from __future__ import annotations

from dataclasses import dataclass, field
import time
from typing import Any, Callable, Literal, Optional, Union

Status = Literal["pass", "fail"]


@dataclass
class CheckReport:
    check_id: str
    params: str
    bound: int
    status: Status
    counterexample: Optional[str] = None
    # None: sem tempo proprio (ver timed_call)
    elapsed_ms: Optional[float] = None
    details: dict[str, Any] = field(default_factory=dict)

    @property
    def passed(self) -> bool:
        return self.status == "pass"

    def to_record(self) -> dict[str, Any]:
        return {
            "check_id": self.check_id,
            "params": self.params,
            "bound": self.bound,
            "status": self.status,
            "counterexample": self.counterexample,
        }


def report_from_failures(
    check_id: str,
    params: str,
    bound: int,
    failures: list[Any],
    describe=str,
) -> CheckReport:
    """Pass se `failures` vazio; senao o primeiro vira o contraexemplo."""
    if not failures:
        return CheckReport(check_id, params, bound, "pass")
    return CheckReport(
        check_id,
        params,
        bound,
        "fail",
        counterexample=describe(failures[0]),
        details={"failures": len(failures)},
    )


def timed_call(check: Callable[..., Union[CheckReport, list[CheckReport]]], *args: Any) -> list[CheckReport]:
    """Executa um check e mede so essa chamada.

    Um calculo que gera varios reports de uma vez tem um unico tempo: ele vai
    para o primeiro report e os demais ficam com elapsed_ms=None. Reports ja
    medidos (chamadas aninhadas) nao sao sobrescritos.
    """
    started = time.perf_counter()
    result = check(*args)
    elapsed = (time.perf_counter() - started) * 1000
    reports = [result] if isinstance(result, CheckReport) else list(result)
    if reports and all(r.elapsed_ms is None for r in reports):
        reports[0].elapsed_ms = elapsed
    return reports
