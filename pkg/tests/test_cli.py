import json

import pytest

from src import __version__
from src.main import main


def run(capsys, *argv):
    code = main(list(argv))
    out, err = capsys.readouterr()
    return code, out, err


def test_ci_invariant_golden(capsys):
    code, out, _ = run(capsys, "ci-invariant", "--n", "2", "--r", "3", "--degrees", "3,3,3", "--phi", "c2")
    assert code == 0
    assert out.splitlines()[0] == "-108*pi"


def test_ci_invariant_symbolic_c1_squared(capsys):
    code, out, _ = run(capsys, "ci-invariant", "--n", "2", "--r", "3", "--symbolic", "--phi", "c1*c1")
    assert code == 0
    assert out.strip() == "0"


def test_ci_invariant_symbolic_keyword(capsys):
    code, out, _ = run(capsys, "ci-invariant", "--n", "2", "--r", "3", "--degrees", "symbolic", "--phi", "c2")
    assert code == 0
    assert "sigma" in out


def test_ci_invariant_wrong_degree_exits_2(capsys):
    code, out, err = run(capsys, "ci-invariant", "--n", "2", "--r", "3", "--degrees", "3,3,3", "--phi", "c3")
    assert code == 2
    assert out == ""
    assert "degree 3 ≠ n = 2" in err


def test_ci_invariant_warnings_in_text_and_json(capsys):
    code, out, _ = run(capsys, "ci-invariant", "--n", "2", "--r", "2", "--degrees", "2,2", "--phi", "c2")
    assert code == 0
    lines = out.splitlines()
    assert any(line.startswith("warning: canonical bundle not positive") for line in lines[1:])
    code, out, _ = run(capsys, "ci-invariant", "--n", "2", "--r", "2", "--degrees", "2,2", "--phi", "c2",
                       "--output", "json")
    doc = json.loads(out)
    assert set(doc) == {"config", "result", "warnings", "version"}
    assert len(doc["warnings"]) == 2
    assert doc["version"] == __version__


def test_parse_error_exits_2(capsys):
    code, _, err = run(capsys, "ci-invariant", "--n", "2", "--r", "3", "--degrees", "3,3,3", "--phi", "c2 +* c1")
    assert code == 2
    assert "position" in err


def test_einstein_transform(capsys):
    assert run(capsys, "einstein-transform", "--mode", "base", "--n", "2", "--phi", "c2")[1].strip() == "c2 - 1/3*c1^2"
    assert run(capsys, "einstein-transform", "--n", "3", "--phi", "T1")[1].strip() == "0"
    code, out, _ = run(capsys, "einstein-transform", "--symbolic-n", "--phi", "c3")
    assert code == 0 and "n + 2" in out


def test_einstein_transform_needs_n(capsys):
    code, _, err = run(capsys, "einstein-transform", "--phi", "c2")
    assert code == 2
    assert "--n" in err


def test_chern_expansion(capsys):
    assert run(capsys, "chern-expansion", "--n", "1")[1].strip() == "Phi_0 = -3; Phi_1 = 2*c1"
    code, out, _ = run(capsys, "chern-expansion", "--n", "2")
    assert code == 0 and out.count("Phi_") == 3
    assert run(capsys, "chern-expansion", "--n", "0")[0] == 2


def test_json_output_is_stable(capsys):
    argv = ("chern-expansion", "--n", "2", "--output", "json")
    first = run(capsys, *argv)[1]
    second = run(capsys, *argv)[1]
    assert first == second
    doc = json.loads(first)
    assert len(doc["result"]["parts"]) == 3
    assert doc["config"]["command"] == "chern-expansion"


def test_verify_tractor(capsys):
    code, out, _ = run(capsys, "verify", "--suite", "tractor", "--n", "2", "--trials", "1")
    assert code == 0
    assert "S_phi_tracefree: pass" in out


def test_verify_json_and_csv(capsys, tmp_path):
    report = tmp_path / "report.csv"
    code, out, _ = run(capsys, "verify", "--suite", "ci", "--trials", "1", "--seed", "5",
                       "--report-csv", str(report), "--output", "json")
    assert code == 0
    doc = json.loads(out)
    assert doc["result"]["seed"] == "5"
    assert {row["identity"] for row in doc["result"]["identities"]} >= {"golden_value", "injectivity"}
    assert report.exists()


def test_verify_failure_exits_1(capsys, monkeypatch):
    from src.pipelines import verify_suites as vs

    monkeypatch.setitem(vs.SUITE_REGISTRY, "ring", {"broken": lambda rng, n, trial: {"x": "1"}})
    code, out, _ = run(capsys, "verify", "--suite", "ring", "--trials", "2")
    assert code == 1
    assert "broken: FAIL (0/2)" in out


def test_ci_sweep(capsys, tmp_path):
    out_csv = tmp_path / "sweep.csv"
    code, out, _ = run(capsys, "ci-sweep", "--n", "2", "--r", "3", "--degree-range", "2..3", "--phi", "c2",
                       "--report-csv", str(out_csv), "--output", "json")
    assert code == 0
    rows = json.loads(out)["result"]["rows"]
    assert [r["degrees"] for r in rows] == ["2,2,2", "2,2,3", "2,3,3", "3,3,3"]
    assert rows[-1]["total_iprime"] == "-108*pi"
    assert out_csv.exists()
    code, out, _ = run(capsys, "ci-sweep", "--n", "2", "--r", "3", "--degree-range", "3..3", "--phi", "c2")
    assert code == 0 and "-108*pi" in out


def test_config_file_and_flag_precedence(capsys, tmp_path):
    cfg = tmp_path / "run.json"
    cfg.write_text(json.dumps({"n": 2, "r": 3, "degrees": "3,3,3", "phi": "c1*c1", "output": "json"}))
    code, out, _ = run(capsys, "ci-invariant", "--config", str(cfg), "--phi", "c2")
    assert code == 0
    doc = json.loads(out)
    assert doc["result"]["total_iprime"] == "-108*pi"
    assert doc["config"]["phi"] == "c2"


def test_bad_config_key_exits_2(capsys, tmp_path):
    cfg = tmp_path / "run.json"
    cfg.write_text(json.dumps({"colour": "red"}))
    code, _, err = run(capsys, "chern-expansion", "--n", "1", "--config", str(cfg))
    assert code == 2
    assert "colour" in err


@pytest.mark.parametrize("seed", ["-1", str(2**64)])
def test_out_of_range_seed_exits_2(capsys, seed):
    code, out, err = run(capsys, "verify", "--suite", "ring", "--seed", seed, "--trials", "1")
    assert code == 2
    assert out == ""
    assert "seed" in err


def test_unknown_subcommand_is_usage_error():
    with pytest.raises(SystemExit) as info:
        main(["frobnicate"])
    assert info.value.code == 2
