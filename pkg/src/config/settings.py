from __future__ import annotations
import os
from dataclasses import dataclass

from dotenv import load_dotenv

from src.errors import ConfigError

load_dotenv()  # safe to call once on import

OUTPUT_KINDS = ("text", "json")
LOG_LEVELS = ("DEBUG", "INFO", "WARNING", "ERROR", "CRITICAL")


@dataclass(frozen=True)
class Settings:
    seed: int = 0
    trials: int = 100
    output: str = "text"
    workers: int = 4
    log_level: str = "WARNING"
    # parse_phi accepts generators up to max(max_generator, n + 1)
    max_generator: int = 8
    report_dir: str = "outputs"


def _int_env(name: str, default: int, minimum: int = 0) -> int:
    raw = os.getenv(name)
    if raw is None or raw.strip() == "":
        return default
    try:
        value = int(raw)
    except ValueError:
        raise ConfigError(f"{name} must be an integer, got {raw!r}") from None
    if value < minimum:
        raise ConfigError(f"{name} must be >= {minimum}, got {value}")
    return value


def _choice_env(name: str, default: str, choices: tuple) -> str:
    raw = (os.getenv(name) or "").strip()
    if not raw:
        return default
    value = raw.upper() if choices is LOG_LEVELS else raw.lower()
    if value not in choices:
        raise ConfigError(f"{name} must be one of {', '.join(choices)}, got {raw!r}")
    return value


def get_settings() -> Settings:
    return Settings(
        seed=_int_env("CRINV_SEED", 0),
        trials=_int_env("CRINV_TRIALS", 100, minimum=1),
        output=_choice_env("CRINV_OUTPUT", "text", OUTPUT_KINDS),
        workers=_int_env("CRINV_WORKERS", 4, minimum=1),
        log_level=_choice_env("CRINV_LOG_LEVEL", "WARNING", LOG_LEVELS),
        max_generator=_int_env("CRINV_MAX_GENERATOR", 8, minimum=1),
        report_dir=os.getenv("CRINV_REPORT_DIR") or "outputs",
    )
