"""Command-line front end, result cache, and suite runner reports."""

from __future__ import annotations

import json
import math

import pytest

from cycloschur import cache
from cycloschur.cli import main
from cycloschur.verify import SUITE_NAMES, SuiteParams, exit_code_for, run_suite


def run_cli(capsys, *argv: str) -> tuple[int, str, str]:
    code = main(list(argv))
    captured = capsys.readouterr()
    return code, captured.out, captured.err


# -- element ---------------------------------------------------------------


def test_element_text_output(capsys):
    code, out, _ = run_cli(capsys, "element", "T1*T1", "--m", "2", "--r", "2")
    assert code == 0
    assert "T[2,1]" in out and "q" in out


def test_element_json_output(capsys):
    code, out, _ = run_cli(
        capsys, "element", "L1^2", "--m", "2", "--r", "2", "--format", "json"
    )
    assert code == 0
    data = json.loads(out)
    assert data["m"] == 2 and data["r"] == 2
    assert len(data["terms"]) == 2  # a multiple of L1 plus a scalar


def test_element_affine_laurent(capsys):
    code, out, _ = run_cli(
        capsys, "element", "X1^-1", "--affine", "--r", "2", "--format", "json"
    )
    assert code == 0
    data = json.loads(out)
    assert data["terms"][0]["a"] == [-1, 0]


def test_element_bad_expression_exits_2(capsys):
    code, _, err = run_cli(capsys, "element", "T1*", "--r", "2")
    assert code == 2
    assert "error" in err


def test_element_context_violation_exits_2(capsys):
    code, _, err = run_cli(capsys, "element", "X1", "--r", "2")
    assert code == 2
    assert "cyclotomic engine" in err


def test_unknown_flag_exits_2(capsys):
    assert run_cli(capsys, "element", "T1", "--bogus")[0] == 2


# -- basis / mult ----------------------------------------------------------


def test_basis_count_matches_closed_form(capsys):
    code, out, _ = run_cli(
        capsys, "basis", "--m", "2", "--n", "2", "--r", "2", "--format", "json"
    )
    assert code == 0
    data = json.loads(out)
    assert data["count"] == len(data["matrices"]) == math.comb(8 + 1, 2)


def test_basis_block_filtering(capsys):
    code, out, _ = run_cli(
        capsys,
        "basis", "--m", "1", "--n", "2", "--r", "2",
        "--lambda", "1,1", "--mu", "2,0", "--format", "json",
    )
    assert code == 0
    assert json.loads(out)["count"] == 1


def test_basis_block_requires_both_margins(capsys):
    code, _, err = run_cli(
        capsys, "basis", "--m", "1", "--n", "2", "--r", "2", "--lambda", "1,1"
    )
    assert code == 2 and "together" in err


def test_basis_guard_exits_2(capsys):
    code, _, err = run_cli(
        capsys, "basis", "--m", "3", "--n", "2", "--r", "3", "--guard", "5"
    )
    assert code == 2 and "error" in err


def test_mult_identity_is_unit(capsys):
    ident = "[[[1],[0]],[[0],[1]]]"
    code, out, _ = run_cli(
        capsys,
        "mult", "--m", "1", "--n", "2", "--r", "2",
        "--A", ident, "--B", ident, "--format", "json",
    )
    assert code == 0
    terms = json.loads(out)["terms"]
    assert len(terms) == 1 and terms[0]["text"] == "1"


def test_mult_incompatible_margins_prints_zero(capsys):
    code, out, _ = run_cli(
        capsys,
        "mult", "--m", "1", "--n", "2", "--r", "2",
        "--A", "[[[2],[0]],[[0],[0]]]", "--B", "[[[1],[0]],[[0],[1]]]",
    )
    assert code == 0 and out.strip() == "0"


def test_mult_malformed_matrix_exits_2(capsys):
    code, _, _ = run_cli(
        capsys, "mult", "--m", "1", "--n", "2", "--r", "2", "--A", "junk", "--B", "[]"
    )
    assert code == 2


# -- tables and cache ------------------------------------------------------


def test_tables_cache_round_trip(tmp_path, capsys):
    args = ("tables", "--m", "1", "--n", "2", "--r", "2", "--format", "json")
    code1, cold, _ = run_cli(capsys, *args, "--cache-dir", str(tmp_path))
    code2, warm, _ = run_cli(capsys, *args, "--cache-dir", str(tmp_path))
    code3, off, _ = run_cli(capsys, *args)
    assert code1 == code2 == code3 == 0
    assert cold == warm == off
    assert list(tmp_path.glob("mult-table-*.json"))


def test_tables_corrupt_cache_is_ignored(tmp_path, capsys):
    args = ("tables", "--m", "1", "--n", "2", "--r", "2", "--format", "json",
            "--cache-dir", str(tmp_path))
    _, good, _ = run_cli(capsys, *args)
    entry = next(tmp_path.glob("mult-table-*.json"))
    entry.write_text('{"kind": "mult-table", "payload": {"basis": [], "products": []}}')
    code, again, _ = run_cli(capsys, *args)
    assert code == 0 and again == good


def test_cache_store_load_roundtrip(tmp_path):
    payload = {"values": [1, 2, 3]}
    cache.store(tmp_path, "demo", {"k": 1}, payload)
    assert cache.load(tmp_path, "demo", {"k": 1}) == payload
    assert cache.load(tmp_path, "demo", {"k": 2}) is None
    assert cache.load(None, "demo", {"k": 1}) is None


def test_cache_detects_payload_tampering(tmp_path):
    cache.store(tmp_path, "demo", {"k": 1}, {"v": 1})
    path = next(tmp_path.glob("demo-*.json"))
    data = json.loads(path.read_text())
    data["payload"]["v"] = 999
    path.write_text(json.dumps(data))
    assert cache.load(tmp_path, "demo", {"k": 1}) is None


def test_cache_dir_resolution(tmp_path, monkeypatch):
    monkeypatch.delenv(cache.ENV_VAR, raising=False)
    assert cache.resolve_cache_dir(None) is None
    monkeypatch.setenv(cache.ENV_VAR, str(tmp_path))
    assert cache.resolve_cache_dir(None) == tmp_path
    assert cache.resolve_cache_dir(str(tmp_path / "x")) == tmp_path / "x"
    assert cache.resolve_cache_dir("") is None


# -- verify ----------------------------------------------------------------


def test_verify_suite_names_cover_contract():
    assert set(SUITE_NAMES) == {
        "pbw", "straighten", "basis", "rank", "commutative",
        "schur-mult", "typeb", "poincare", "epsilon", "affine-sym",
    }


def test_run_suite_unknown_name():
    with pytest.raises(ValueError):
        run_suite("nope", SuiteParams())


def test_run_suite_deterministic_given_seed():
    def strip(report):
        report = dict(report)
        report.pop("seconds")
        report["checks"] = [
            {k: v for k, v in c.items() if k != "seconds"} for c in report["checks"]
        ]
        return report

    a = run_suite("pbw", SuiteParams(m=2, r=2, seed=5))
    b = run_suite("pbw", SuiteParams(m=2, r=2, seed=5))
    assert strip(a) == strip(b)


def test_run_suite_all_trivial_grid_fast():
    report = run_suite("all", SuiteParams(m=1, n=1, r=1))
    assert report["status"] == "pass"
    assert report["seconds"] < 1.0
    ids = [c["check"] for c in report["checks"]]
    assert ids == sorted(ids)


def test_run_suite_guard_reports_skip_not_failure():
    report = run_suite("rank", SuiteParams(m=3, n=2, r=3, guard=5))
    assert report["status"] == "pass"
    assert report["checks"][0]["status"] == "skipped(guard)"


def test_verify_cli_rank_exit_zero(capsys):
    code, out, _ = run_cli(
        capsys, "verify", "--suite", "rank", "--m", "2", "--n", "2", "--r", "2"
    )
    assert code == 0
    assert "rank.blocks: pass" in out
    assert "PASS" in out


def test_verify_cli_json_report(capsys):
    code, out, _ = run_cli(
        capsys,
        "verify", "--suite", "commutative", "--m", "2", "--r", "2",
        "--format", "json",
    )
    assert code == 0
    report = json.loads(out)
    assert report["status"] == "pass"
    assert report["checks"][0]["check"] == "commutative.pairs"


def test_verify_cli_failure_exit_one(capsys, monkeypatch):
    import cycloschur.cli as cli_mod

    def fake_run_suite(name, params):
        return {
            "suite": name,
            "params": params.to_dict(),
            "status": "fail",
            "checks": [
                {"check": "x.y", "params": {}, "status": "fail",
                 "witness": {"bad": 1}, "seconds": 0.0}
            ],
            "seconds": 0.0,
        }

    monkeypatch.setattr(cli_mod, "run_suite", fake_run_suite)
    code, out, _ = run_cli(capsys, "verify", "--suite", "rank")
    assert code == 1
    assert "witness" in out


def test_exit_code_mapping():
    assert exit_code_for({"status": "pass"}) == 0
    assert exit_code_for({"status": "fail"}) == 1


def test_verify_cli_typeb_example_present(capsys):
    code, out, _ = run_cli(
        capsys, "verify", "--suite", "typeb", "--r", "3", "--n", "2"
    )
    assert code == 0
    assert "typeb.example: pass" in out
