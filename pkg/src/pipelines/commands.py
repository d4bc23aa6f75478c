"""Subcommand implementations. Each returns the result document, its text rendering and an exit code."""
from __future__ import annotations

import io
import logging
from dataclasses import dataclass
from typing import Callable, Dict, List

import pandas as pd

from src.algebra.expansion import chern_expansion, format_expansion
from src.algebra.invariants import Mode, einstein_transform
from src.errors import ConfigError
from src.pipelines.ci_sweep import degree_tuples, run_sweep
from src.pipelines.complete_intersection import CIData, total_Iprime, validate_positivity
from src.pipelines.documents import ResultDocument, RunConfig
from src.pipelines.verify_suites import IdentityReport, reports_frame, run_suites, write_report_csv
from src.processors.expression_parser import parse_phi

# Optional pretty tables; falls back to pandas text if not installed
try:
    from rich.console import Console
    from rich.table import Table
    RICH = True
except Exception:
    RICH = False

logger = logging.getLogger(__name__)

MODES = {"domain": Mode.DOMAIN, "base": Mode.BASE}


@dataclass
class CommandOutcome:
    document: ResultDocument
    text: str
    exit_code: int = 0


def _require(config: RunConfig, *names: str) -> None:
    missing = [f"--{name.replace('_', '-')}" for name in names if getattr(config, name) is None]
    if missing:
        raise ConfigError(f"{config.command} needs {', '.join(missing)}")


def _phi(config: RunConfig):
    _require(config, "phi")
    return parse_phi(config.phi, max(config.max_generator, (config.n or 0) + 1))


def _render_table(title: str, frame: pd.DataFrame) -> str:
    if not RICH:
        return f"{title}\n{frame.to_string(index=False)}"
    table = Table(title=title)
    for col in frame.columns:
        table.add_column(str(col))
    for row in frame.itertuples(index=False):
        table.add_row(*[str(v) for v in row])
    console = Console(file=io.StringIO(), width=140, color_system=None)
    console.print(table)
    return console.file.getvalue().rstrip("\n")


# ───────────────────────────────────────────────────────────────────────────────
# Commands
# ───────────────────────────────────────────────────────────────────────────────
def cmd_ci_invariant(config: RunConfig) -> CommandOutcome:
    _require(config, "n", "r")
    if config.symbolic and config.degrees:
        raise ConfigError("pass either --degrees or --symbolic, not both")
    degrees = None if config.symbolic or not config.degrees else tuple(config.degrees)
    ci = CIData(config.n, config.r, degrees)
    phi = _phi(config)
    value = total_Iprime(phi, ci)
    report = validate_positivity(ci)
    result = {"phi": str(phi), "total_iprime": str(value), "symbolic": ci.symbolic}
    text = "\n".join([str(value)] + [f"warning: {w}" for w in report.warnings])
    return CommandOutcome(ResultDocument.for_run(config, result, report.warnings), text)


def cmd_einstein_transform(config: RunConfig) -> CommandOutcome:
    if not config.symbolic_n:
        _require(config, "n")
    n = None if config.symbolic_n else config.n
    phi = _phi(config)
    out = einstein_transform(phi, n, MODES[config.mode])
    result = {"phi": str(phi), "transform": str(out), "mode": config.mode, "n": "n" if n is None else str(n)}
    return CommandOutcome(ResultDocument.for_run(config, result), str(out))


def cmd_chern_expansion(config: RunConfig) -> CommandOutcome:
    _require(config, "n")
    parts = chern_expansion(config.n)
    result = {"parts": [str(p) for p in parts]}
    return CommandOutcome(ResultDocument.for_run(config, result), format_expansion(parts))


def _verify_text(reports: List[IdentityReport]) -> str:
    lines = []
    suite = None
    for rep in reports:
        if rep.suite != suite:
            suite = rep.suite
            lines.append(f"[{suite}]")
        ran = rep.passed + rep.failed
        line = f"  {rep.identity}: {rep.status} ({rep.passed}/{ran})"
        if rep.skipped:
            line += f", {rep.skipped} skipped"
        if rep.first_counterexample:
            line += f"; first counterexample: {rep.first_counterexample}"
        lines.append(line)
    failed = sum(1 for r in reports if r.failed)
    lines.append(f"{len(reports) - failed}/{len(reports)} identities passed")
    return "\n".join(lines)


def cmd_verify(config: RunConfig) -> CommandOutcome:
    reports = run_suites(config.suite, config.trials, config.seed, config.n, config.workers)
    if config.report_path():
        write_report_csv(reports, config.report_path())
    rows = reports_frame(reports).to_dict(orient="records")
    for row in rows:
        for key in ("passed", "failed", "skipped"):
            row[key] = int(row[key])
    result = {"suite": config.suite, "seed": str(config.seed), "trials": config.trials, "identities": rows}
    code = 1 if any(r.failed for r in reports) else 0
    return CommandOutcome(ResultDocument.for_run(config, result), _verify_text(reports), code)


def cmd_ci_sweep(config: RunConfig) -> CommandOutcome:
    _require(config, "n", "r")
    phi = _phi(config)
    lo, hi = config.degree_bounds()
    frame = run_sweep(phi, config.n, degree_tuples(config.r, lo, hi), config.workers, config.report_path())
    warnings = sorted({w for cell in frame["warnings"] for w in cell.split("; ") if w})
    result = {"phi": str(phi), "rows": frame.to_dict(orient="records")}
    text = _render_table(f"total I' of {phi}, n = {config.n}, r = {config.r}", frame)
    return CommandOutcome(ResultDocument.for_run(config, result, warnings), text)


COMMAND_REGISTRY: Dict[str, Callable[[RunConfig], CommandOutcome]] = {
    "ci-invariant": cmd_ci_invariant,
    "einstein-transform": cmd_einstein_transform,
    "chern-expansion": cmd_chern_expansion,
    "verify": cmd_verify,
    "ci-sweep": cmd_ci_sweep,
}


def dispatch(config: RunConfig) -> CommandOutcome:
    logger.debug("dispatching %s", config.command)
    return COMMAND_REGISTRY[config.command](config)
