from __future__ import annotations
import json
from pathlib import Path
from typing import Any, Dict

from src.errors import ConfigError


def strict_json_object(text: str) -> Dict[str, Any]:
    """Parse a whole document as one JSON object; anything around it is an error."""
    try:
        obj = json.loads(text)
    except json.JSONDecodeError as exc:
        raise ConfigError(f"config is not valid JSON: {exc}") from None
    if not isinstance(obj, dict):
        raise ConfigError("config must be a JSON object")
    return obj


def load_config_file(path: str | Path) -> Dict[str, Any]:
    """Read a --config file; keys mirror the long flags, with '-' or '_'."""
    p = Path(path)
    if not p.is_file():
        raise ConfigError(f"config file not found: {p}")
    raw = strict_json_object(p.read_text(encoding="utf-8"))
    return {str(k).replace("-", "_"): v for k, v in raw.items()}
