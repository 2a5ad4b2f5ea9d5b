from __future__ import annotations

import json

from ngsmells.detectors import Smell
from ngsmells.detectors.base import Finding
from ngsmells.pipeline import analyze_project
from ngsmells.reporting import Report, exit_code, render_json, render_text, report_from_dict
from ngsmells.scanner import FrameworkKind

from conftest import FIXTURES


def _report(name: str, **kw) -> Report:
    return Report.from_analysis(analyze_project(FIXTURES / name, **kw))


def test_text_listing14_line():
    text = render_text(_report("listing14"))
    assert (
        "home.component.ts:12-14 [InheritanceInsteadOfComposition] HomeComponent: "
        "component class extends user-defined BasePageComponent"
    ) in text.splitlines()
    assert "Summary (1 finding):" in text


def test_text_empty():
    r = Report(FrameworkKind.ANGULAR, 0, [])
    lines = render_text(r).splitlines()
    assert lines[0].startswith("ng-smells ") and "No code smells detected." in lines


def test_text_two_findings_ascending():
    r = _report("listing11")
    starts = [int(l.split(":")[1].split("-")[0]) for l in render_text(r).splitlines() if "[OverusingAnyType]" in l]
    assert starts == sorted(starts) and len(starts) == 4


def test_json_empty_report():
    d = json.loads(render_json(Report(FrameworkKind.UNKNOWN, 0, [])))
    assert list(d) == ["tool_version", "framework", "files_analyzed", "findings", "summary", "diagnostics"]
    assert d["findings"] == [] and set(d["summary"].values()) == {0} and len(d["summary"]) == 11


def test_json_round_trip():
    r = _report("listing15", enabled=set(Smell))
    back = report_from_dict(json.loads(render_json(r)))
    assert back.findings == list(r.findings)
    assert (back.framework, back.files_analyzed, list(back.diagnostics)) == (r.framework, r.files_analyzed, list(r.diagnostics))


def test_json_finding_keys_and_format():
    out = render_json(_report("listing14"))
    assert out.endswith("}\n") and '\n  "findings"' in out
    (f,) = json.loads(out)["findings"]
    assert list(f) == ["smell", "file", "start_line", "end_line", "subject", "message", "maturity", "metadata"]
    assert f["maturity"] == "Evaluated"


def test_json_deterministic_bytes():
    assert render_json(_report("listing15")) == render_json(_report("listing15"))


def test_summary_matches_grouped_counts():
    r = _report("listing15")
    for smell, count in r.summary.items():
        assert count == sum(1 for f in r.findings if f.smell.value == smell)


def test_exit_codes():
    assert exit_code(Report(FrameworkKind.ANGULAR, 1, [])) == 0
    f = Finding(Smell.LARGE_FILE, "a.ts", 1, 2, "a.ts", "m")
    assert exit_code(Report(FrameworkKind.ANGULAR, 1, [f])) == 1


def test_diagnostics_section():
    r = Report(FrameworkKind.ANGULAR, 1, [], ["a.ts: something odd"])
    assert "Diagnostics (1):" in render_text(r)
