import json
from pathlib import Path

import pytest

from src.config.settings import get_settings
from src.errors import ConfigError
from src.pipelines.documents import ResultDocument, build_run_config
from src.utils.json_parser import load_config_file, strict_json_object


def test_settings_defaults(monkeypatch):
    for name in ("CRINV_SEED", "CRINV_TRIALS", "CRINV_OUTPUT", "CRINV_WORKERS", "CRINV_LOG_LEVEL"):
        monkeypatch.delenv(name, raising=False)
    s = get_settings()
    assert (s.seed, s.trials, s.output, s.workers, s.log_level) == (0, 100, "text", 4, "WARNING")


def test_settings_from_environment(monkeypatch):
    monkeypatch.setenv("CRINV_SEED", "17")
    monkeypatch.setenv("CRINV_OUTPUT", "JSON")
    monkeypatch.setenv("CRINV_LOG_LEVEL", "debug")
    s = get_settings()
    assert (s.seed, s.output, s.log_level) == (17, "json", "DEBUG")


@pytest.mark.parametrize("name, value", [("CRINV_SEED", "abc"), ("CRINV_OUTPUT", "yaml"), ("CRINV_TRIALS", "0")])
def test_bad_settings(monkeypatch, name, value):
    monkeypatch.setenv(name, value)
    with pytest.raises(ConfigError):
        get_settings()


def test_strict_json_object():
    assert strict_json_object(' {"n": 2}\n') == {"n": 2}
    with pytest.raises(ConfigError):
        strict_json_object('```json\n{"n": 2}\n```')
    with pytest.raises(ConfigError):
        strict_json_object('noise {"n": 3} tail')
    with pytest.raises(ConfigError):
        strict_json_object("[1, 2]")
    with pytest.raises(ConfigError):
        strict_json_object("{not json}")


def test_load_config_file_normalizes_keys(tmp_path):
    path = tmp_path / "run.json"
    path.write_text(json.dumps({"log-level": "INFO", "degrees": [3, 3, 3]}), encoding="utf-8")
    assert load_config_file(path) == {"log_level": "INFO", "degrees": [3, 3, 3]}
    with pytest.raises(ConfigError):
        load_config_file(tmp_path / "missing.json")


def test_run_config_validation():
    cfg = build_run_config({"command": "verify", "log_level": "info"})
    assert cfg.log_level == "INFO" and cfg.trials == 100
    assert build_run_config({"command": "ci-sweep", "degree_range": "3..5"}).degree_bounds() == (3, 5)
    for bad in ({"command": "nope"}, {"command": "verify", "trials": 0},
                {"command": "ci-sweep", "degree_range": "5..3"}, {"command": "verify", "colour": "red"}):
        with pytest.raises(ConfigError):
            build_run_config(bad)


def test_result_document_roundtrip():
    cfg = build_run_config({"command": "chern-expansion", "n": 1})
    doc = ResultDocument.for_run(cfg, {"parts": ["-3", "2*c1"]})
    text = doc.model_dump_json(indent=2)
    again = ResultDocument.model_validate_json(text)
    assert again == doc
    assert again.model_dump_json(indent=2) == text
    assert json.loads(text)["config"]["n"] == 1


def test_relative_report_paths_resolve_under_report_dir(tmp_path):
    base = {"command": "verify", "report_dir": "runs"}
    assert build_run_config(base).report_path() is None
    assert build_run_config({**base, "report_csv": "v.csv"}).report_path() == Path("runs") / "v.csv"
    absolute = tmp_path / "v.csv"
    assert build_run_config({**base, "report_csv": str(absolute)}).report_path() == absolute
