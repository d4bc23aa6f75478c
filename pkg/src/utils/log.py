from __future__ import annotations
import logging
import sys

# Optional pretty handler; falls back to a plain stream handler if not installed
try:
    from rich.console import Console
    from rich.logging import RichHandler
    RICH = True
except Exception:
    RICH = False

_FORMAT = "%(name)s: %(message)s"


def setup_logging(level: str = "WARNING") -> logging.Logger:
    """Route all library logging to stderr; stdout stays reserved for the result document."""
    root = logging.getLogger()
    for handler in list(root.handlers):
        if getattr(handler, "_crinv", False):
            root.removeHandler(handler)
    if RICH:
        handler: logging.Handler = RichHandler(
            console=Console(stderr=True), show_time=False, show_path=False, markup=False
        )
    else:
        handler = logging.StreamHandler(sys.stderr)
    handler.setFormatter(logging.Formatter(_FORMAT))
    handler._crinv = True  # type: ignore[attr-defined]
    root.addHandler(handler)
    root.setLevel(getattr(logging, level.upper(), logging.WARNING))
    return root
