"""Validated run configuration and the JSON result document."""
from __future__ import annotations

from pathlib import Path
from typing import Any, Dict, List, Literal, Optional

from pydantic import BaseModel, ConfigDict, Field, ValidationError, field_validator

from src import __version__
from src.errors import ConfigError

SUITES = ("lefschetz", "tractor", "ring", "ci", "all")


class RunConfig(BaseModel):
    model_config = ConfigDict(extra="forbid")

    command: Literal["ci-invariant", "einstein-transform", "chern-expansion", "verify", "ci-sweep"]
    output: Literal["text", "json"] = "text"
    log_level: str = "WARNING"
    seed: int = Field(0, ge=0, lt=2**64)
    trials: int = Field(100, ge=1)
    workers: int = Field(4, ge=1)
    max_generator: int = Field(8, ge=1)
    n: Optional[int] = None
    r: Optional[int] = None
    degrees: Optional[List[int]] = None
    phi: Optional[str] = None
    mode: Literal["domain", "base"] = "domain"
    symbolic: bool = False
    symbolic_n: bool = False
    suite: Literal["lefschetz", "tractor", "ring", "ci", "all"] = "all"
    degree_range: Optional[str] = None
    report_csv: Optional[str] = None
    report_dir: str = "outputs"

    @field_validator("log_level")
    @classmethod
    def _level(cls, v: str) -> str:
        v = v.upper()
        if v not in ("DEBUG", "INFO", "WARNING", "ERROR", "CRITICAL"):
            raise ValueError(f"unknown log level {v}")
        return v

    @field_validator("degree_range")
    @classmethod
    def _range(cls, v: Optional[str]) -> Optional[str]:
        if v is None:
            return v
        lo, sep, hi = v.partition("..")
        if not sep or not lo.strip().isdigit() or not hi.strip().isdigit() or int(lo) > int(hi) or int(lo) < 1:
            raise ValueError(f"degree range must look like lo..hi with 1 <= lo <= hi, got {v!r}")
        return v

    def degree_bounds(self) -> tuple:
        lo, _, hi = (self.degree_range or "2..4").partition("..")
        return int(lo), int(hi)

    def report_path(self) -> Optional[Path]:
        """--report-csv; relative paths land under report_dir."""
        if not self.report_csv:
            return None
        path = Path(self.report_csv)
        return path if path.is_absolute() else Path(self.report_dir) / path


def build_run_config(values: Dict[str, Any]) -> RunConfig:
    try:
        return RunConfig(**values)
    except ValidationError as exc:
        problems = "; ".join(f"{'.'.join(map(str, e['loc']))}: {e['msg']}" for e in exc.errors())
        raise ConfigError(f"invalid configuration: {problems}") from None


class ResultDocument(BaseModel):
    config: Dict[str, Any]
    result: Any
    warnings: List[str] = Field(default_factory=list)
    version: str = __version__

    @classmethod
    def for_run(cls, config: RunConfig, result: Any, warnings: Optional[List[str]] = None) -> "ResultDocument":
        return cls(config=config.model_dump(exclude_none=True), result=result, warnings=warnings or [])
