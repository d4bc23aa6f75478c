"""Total I′ over many numeric degree tuples, evaluated in parallel."""
from __future__ import annotations

import logging
from concurrent.futures import ThreadPoolExecutor, as_completed
from itertools import combinations_with_replacement
from pathlib import Path
from typing import Dict, List, Optional, Sequence, Tuple

import pandas as pd

from src.algebra.invariants import InvariantPoly
from src.algebra.scalars import format_rat
from src.pipelines.complete_intersection import CIData, total_Iprime, transformed_chern_number, validate_positivity

logger = logging.getLogger(__name__)

COLUMNS = ["degrees", "transformed_chern_number", "total_iprime", "warnings"]


def degree_tuples(r: int, lo: int, hi: int) -> List[Tuple[int, ...]]:
    """All non-decreasing r-tuples with entries in lo..hi."""
    return list(combinations_with_replacement(range(lo, hi + 1), r))


def _row(phi: InvariantPoly, n: int, degrees: Tuple[int, ...]) -> Dict[str, str]:
    ci = CIData(n, len(degrees), degrees)
    report = validate_positivity(ci)
    return {
        "degrees": ",".join(str(d) for d in degrees),
        "transformed_chern_number": format_rat(transformed_chern_number(phi, ci)),
        "total_iprime": str(total_Iprime(phi, ci)),
        "warnings": "; ".join(report.warnings),
    }


def run_sweep(phi: InvariantPoly, n: int, tuples: Sequence[Tuple[int, ...]], workers: int = 4,
              report_csv: Optional[str | Path] = None) -> pd.DataFrame:
    rows = []
    with ThreadPoolExecutor(max_workers=workers) as ex:
        futs = {ex.submit(_row, phi, n, tuple(t)): tuple(t) for t in tuples}
        for fut in as_completed(futs):
            rows.append((futs[fut], fut.result()))

    # sort by degree tuple so reruns diff cleanly
    rows.sort(key=lambda item: item[0])
    df = pd.DataFrame([row for _, row in rows], columns=COLUMNS)
    logger.info("ci sweep: %d degree tuples for n = %d", len(df), n)
    if report_csv:
        out_path = Path(report_csv)
        out_path.parent.mkdir(parents=True, exist_ok=True)
        df.to_csv(out_path, index=False)
        logger.info("wrote sweep -> %s", out_path)
    return df
