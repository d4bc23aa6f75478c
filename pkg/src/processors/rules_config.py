import re
from typing import Dict, List, Tuple

from src.algebra.invariants import Basis

# ───────────────────────────────────────────────────────────────────────────────
# Token patterns for invariant-polynomial expressions
# (Used by expression_parser via TOKEN_PATTERNS, in priority order)
# ───────────────────────────────────────────────────────────────────────────────
def _re(pattern: str, flags=0) -> re.Pattern:
    """Compile one token pattern; the tokenizer matches it at the current position."""
    return re.compile(pattern, flags)


TOKEN_PATTERNS: List[Tuple[str, re.Pattern]] = [
    ("SPACE", _re(r"\s+")),
    ("NUMBER", _re(r"\d+(?:/\d+)?")),
    ("GENERATOR", _re(r"([cT])(\d+)")),
    ("CARET", _re(r"\^|\*\*")),
    ("STAR", _re(r"\*")),
    ("PLUS", _re(r"\+")),
    ("MINUS", _re(r"-")),
]

# Generator letter -> basis
GENERATOR_BASIS: Dict[str, Basis] = {
    "c": Basis.CHERN,
    "T": Basis.POWER,
}
