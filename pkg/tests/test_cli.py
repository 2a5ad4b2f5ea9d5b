from __future__ import annotations

import json

import pytest

from ngsmells.cli import main

from conftest import DATASET, FIXTURES


def run(capsys, *argv):
    code = main([str(a) for a in argv])
    out, err = capsys.readouterr()
    return code, out, err


def test_analyze_listing14_json(capsys):
    code, out, _ = run(capsys, "analyze", FIXTURES / "listing14", "--format", "json")
    assert code == 1
    (f,) = json.loads(out)["findings"]
    assert f["smell"] == "InheritanceInsteadOfComposition"


def test_analyze_clean(capsys):
    code, out, _ = run(capsys, "analyze", FIXTURES / "clean")
    assert code == 0 and "No code smells detected." in out


def test_list_smells(capsys):
    code, out, _ = run(capsys, "list-smells")
    lines = out.strip().splitlines()
    assert code == 0 and len(lines) == 11
    assert sum(" Evaluated " in l for l in lines) == 5


def test_unknown_flag_usage_exit_2(capsys):
    code, _, err = run(capsys, "analyze", FIXTURES / "clean", "--bogus")
    assert code == 2 and "usage:" in err


def test_missing_subcommand(capsys):
    code, _, err = run(capsys)
    assert code == 2 and "usage:" in err


def test_fatal_missing_root(capsys, tmp_path):
    code, _, err = run(capsys, "analyze", tmp_path / "absent")
    assert code == 2 and "not found" in err


def test_default_runs_only_evaluated(capsys):
    code, out, _ = run(capsys, "analyze", FIXTURES / "listing13")
    assert code == 0
    code, out, _ = run(capsys, "analyze", FIXTURES / "listing13", "--experimental")
    assert code == 1 and "[DirectDomManipulation]" in out


def test_smells_filter_keeps_findings_unchanged(capsys):
    _, full, _ = run(capsys, "analyze", FIXTURES / "listing15", "--experimental", "--format", "json")
    _, only, _ = run(capsys, "analyze", FIXTURES / "listing15", "--smells", "PropDrilling,LargeFile", "--format", "json")
    all_findings = json.loads(full)["findings"]
    kept = json.loads(only)["findings"]
    assert kept == [f for f in all_findings if f["smell"] in ("PropDrilling", "LargeFile")]


def test_framework_override_verbatim(capsys):
    _, out, _ = run(capsys, "analyze", FIXTURES / "user_card", "--framework", "react-ts", "--format", "json")
    d = json.loads(out)
    assert d["framework"] == "ReactTypeScript" and d["findings"] == []


def test_config_env_fallback(capsys, tmp_path, monkeypatch):
    cfg = tmp_path / "cfg.json"
    cfg.write_text('{"too_many_inputs": 8}')
    monkeypatch.setenv("NG_SMELL_CONFIG", str(cfg))
    code, _, _ = run(capsys, "analyze", FIXTURES / "user_card")
    assert code == 0
    # an explicit --config wins over the environment
    cfg2 = tmp_path / "cfg2.json"
    cfg2.write_text('{"too_many_inputs": 7}')
    code, _, _ = run(capsys, "analyze", FIXTURES / "user_card", "--config", cfg2)
    assert code == 1


def test_bad_config_is_fatal(capsys, tmp_path):
    cfg = tmp_path / "cfg.json"
    cfg.write_text('{"too_many_inputs": 0}')
    code, _, err = run(capsys, "analyze", FIXTURES / "user_card", "--config", cfg)
    assert code == 2 and "too_many_inputs" in err


def test_out_file(capsys, tmp_path):
    target = tmp_path / "report.json"
    code, out, _ = run(capsys, "analyze", FIXTURES / "listing14", "--format", "json", "--out", target)
    assert code == 1 and out == ""
    assert json.loads(target.read_text())["summary"]["InheritanceInsteadOfComposition"] == 1


def test_evaluate_json(capsys):
    code, out, _ = run(capsys, "evaluate", "--dataset", DATASET, "--manifest", DATASET / "manifest.json", "--format", "json")
    d = json.loads(out)
    assert code == 0 and len(d) == 5
    assert all(row["recall"] == 1.0 and row["precision"] == 1.0 for row in d.values())


def test_evaluate_bad_manifest(capsys, tmp_path):
    (tmp_path / "m.json").write_text("[]x")
    code, _, err = run(capsys, "evaluate", "--dataset", tmp_path, "--manifest", tmp_path / "m.json")
    assert code == 2 and "manifest" in err


@pytest.mark.parametrize("bad", ["--smells=GodClass"])
def test_unknown_smell_name_fatal(capsys, bad):
    code, _, err = run(capsys, "analyze", FIXTURES / "clean", bad)
    assert code == 2 and "GodClass" in err
