"""
Command-line entry point: python -m src.main <subcommand> [flags].

Values are layered as environment settings, then the --config JSON file, then
explicit flags. Exit codes: 0 success, 1 verification failure, 2 usage error.
"""
from __future__ import annotations

import argparse
import logging
import sys
from dataclasses import asdict
from typing import Any, Dict, List, Optional

from src import __version__
from src.config.settings import LOG_LEVELS, OUTPUT_KINDS, get_settings
from src.errors import ConfigError, CRInvariantError
from src.pipelines.commands import dispatch
from src.pipelines.documents import SUITES, build_run_config
from src.utils.json_parser import load_config_file
from src.utils.log import setup_logging

logger = logging.getLogger(__name__)


def _common(p: argparse.ArgumentParser) -> None:
    p.add_argument("--config", default=None, help="JSON file whose keys mirror the long flags")
    p.add_argument("--output", choices=OUTPUT_KINDS, default=None, help="text (default) or json")
    p.add_argument("--log-level", dest="log_level", type=str.upper, choices=LOG_LEVELS, default=None)


def _dimension_flags(p: argparse.ArgumentParser, with_r: bool = True) -> None:
    p.add_argument("--n", type=int, default=None, help="complex dimension n")
    if with_r:
        p.add_argument("--r", type=int, default=None, help="number of defining equations r")


def build_parser() -> argparse.ArgumentParser:
    p = argparse.ArgumentParser(
        prog="crinv",
        description="Exact CR-invariant computations and identity verification.",
    )
    p.add_argument("--version", action="version", version=f"%(prog)s {__version__}")
    sub = p.add_subparsers(dest="command", required=True)

    ci = sub.add_parser("ci-invariant", help="total I' of a circle bundle over a complete intersection")
    _common(ci)
    _dimension_flags(ci)
    ci.add_argument("--degrees", default=None, help="comma-separated degrees, e.g. 3,3,3, or 'symbolic'")
    ci.add_argument("--symbolic", action="store_true", default=None, help="keep sigma_1..sigma_r symbolic")
    ci.add_argument("--phi", default=None, help="invariant polynomial, e.g. 'c2' or '2*T2 - c1^2'")

    et = sub.add_parser("einstein-transform", help="trace-free (Einstein) transform of an invariant polynomial")
    _common(et)
    _dimension_flags(et, with_r=False)
    et.add_argument("--mode", choices=("domain", "base"), default=None)
    et.add_argument("--symbolic-n", dest="symbolic_n", action="store_true", default=None)
    et.add_argument("--phi", default=None)

    ce = sub.add_parser("chern-expansion", help="expand c_(n+1) of the renormalized curvature in powers of omega")
    _common(ce)
    _dimension_flags(ce, with_r=False)

    ve = sub.add_parser("verify", help="run the randomized identity suites")
    _common(ve)
    _dimension_flags(ve, with_r=False)
    ve.add_argument("--suite", choices=SUITES, default=None)
    ve.add_argument("--trials", type=int, default=None)
    ve.add_argument("--seed", type=int, default=None)
    ve.add_argument("--workers", type=int, default=None)
    ve.add_argument("--report-csv", dest="report_csv", default=None, help="write the per-identity table here")

    sw = sub.add_parser("ci-sweep", help="total I' over all non-decreasing degree tuples in a range")
    _common(sw)
    _dimension_flags(sw)
    sw.add_argument("--degree-range", dest="degree_range", default=None, help="lo..hi (default 2..4)")
    sw.add_argument("--phi", default=None)
    sw.add_argument("--workers", type=int, default=None)
    sw.add_argument("--report-csv", dest="report_csv", default=None)
    return p


def _normalize_degrees(values: Dict[str, Any]) -> None:
    raw = values.get("degrees")
    if raw is None or isinstance(raw, list):
        return
    text = str(raw).strip()
    if text.lower() == "symbolic":
        values["degrees"] = None
        values["symbolic"] = True
        return
    try:
        values["degrees"] = [int(d) for d in text.split(",") if d.strip()]
    except ValueError:
        raise ConfigError(f"--degrees must be comma-separated integers or 'symbolic', got {text!r}") from None


def merged_values(args: argparse.Namespace) -> Dict[str, Any]:
    """Settings, then the --config file, then explicit flags; later layers win."""
    values: Dict[str, Any] = asdict(get_settings())
    if args.config:
        values.update(load_config_file(args.config))
    for key, value in vars(args).items():
        if key == "config" or value is None:
            continue
        values[key] = value
    _normalize_degrees(values)
    return values


def main(argv: Optional[List[str]] = None) -> int:
    args = build_parser().parse_args(argv)
    debug = False
    try:
        config = build_run_config(merged_values(args))
        debug = config.log_level == "DEBUG"
        setup_logging(config.log_level)
        outcome = dispatch(config)
    except CRInvariantError as exc:
        if debug:
            logger.exception("command failed")
        print(f"error: {exc}", file=sys.stderr)
        return 2

    if config.output == "json":
        print(outcome.document.model_dump_json(indent=2))
    else:
        print(outcome.text)
    return outcome.exit_code


if __name__ == "__main__":
    sys.exit(main())
