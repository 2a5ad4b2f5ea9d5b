from __future__ import annotations

import itertools
import json

import pytest

from ngsmells.diagnostics import DiagnosticSink
from ngsmells.errors import RootNotFound
from ngsmells.scanner import (
    DEFAULT_EXCLUDES,
    FileKind,
    FrameworkKind,
    classify,
    detect_framework,
    detect_project_framework,
    glob_match,
    normalize_path,
    scan_project,
)


def _touch(root, rel, text=""):
    p = root / rel
    p.parent.mkdir(parents=True, exist_ok=True)
    p.write_text(text)


def test_scan_classifies_three_kinds(tmp_path):
    for name in ("a.ts", "a.html", "package.json"):
        _touch(tmp_path, name, "{}")
    entries = scan_project(tmp_path, excludes=[])
    assert [e.path for e in entries] == ["a.html", "a.ts", "package.json"]
    assert {e.kind for e in entries} == {FileKind.TYPESCRIPT, FileKind.TEMPLATE, FileKind.MANIFEST}


def test_scan_empty_dir(tmp_path):
    assert scan_project(tmp_path, excludes=[]) == []


def test_scan_excludes_node_modules(tmp_path):
    _touch(tmp_path, "node_modules/x.ts")
    assert scan_project(tmp_path, excludes=["node_modules/**"]) == []


def test_default_excludes_drop_specs_and_build_output(tmp_path):
    for rel in ("src/app.ts", "src/app.spec.ts", "dist/main.ts", "node_modules/lib/index.ts", "src/deep/b.test.tsx"):
        _touch(tmp_path, rel)
    assert [e.path for e in scan_project(tmp_path)] == ["src/app.ts"]


def test_scan_missing_root(tmp_path):
    with pytest.raises(RootNotFound):
        scan_project(tmp_path / "nope")


def test_scan_is_sorted_and_deterministic(tmp_path):
    for rel in ("b/z.ts", "a/y.ts", "c.html", "a/b/x.ts"):
        _touch(tmp_path, rel)
    first = scan_project(tmp_path, excludes=[])
    assert first == scan_project(tmp_path, excludes=[])
    assert [e.path for e in first] == sorted(e.path for e in first)


def test_sizes_recorded(tmp_path):
    _touch(tmp_path, "a.ts", "abcd")
    (entry,) = scan_project(tmp_path, excludes=[])
    assert entry.size_bytes == 4


@pytest.mark.parametrize(
    "pattern,path,expected",
    [
        ("node_modules/**", "node_modules/a/b.ts", True),
        ("node_modules/**", "src/node_modules/a.ts", False),
        ("**/*.spec.ts", "a.spec.ts", True),
        ("**/*.spec.ts", "x/y/a.spec.ts", True),
        ("*.ts", "x/a.ts", False),
        ("src/*.ts", "src/a.ts", True),
        ("src/**", "src", False),
    ],
)
def test_glob_match(pattern, path, expected):
    assert glob_match(pattern, path) is expected


def test_classify_and_normalize():
    assert classify("x/package.json") is FileKind.MANIFEST
    assert classify("a.TSX") is FileKind.TYPESCRIPT
    assert classify("a.css") is FileKind.OTHER
    assert normalize_path("a\\b/./c.ts") == "a/b/c.ts"
    with pytest.raises(ValueError):
        normalize_path("../escape.ts")


def _manifest(deps):
    return json.dumps({"dependencies": {d: "*" for d in deps}})


def test_detect_framework_examples():
    assert detect_framework(_manifest(["@angular/core"])) is FrameworkKind.ANGULAR
    assert detect_framework(_manifest(["react", "typescript"])) is FrameworkKind.REACT_TS
    assert detect_framework(_manifest(["@angular/core", "react"])) is FrameworkKind.ANGULAR


def _rule_table_oracle(angular: bool, react: bool, ts: bool) -> FrameworkKind:
    # written out case by case so it does not share structure with the implementation
    table = {
        (True, True, True): FrameworkKind.ANGULAR,
        (True, True, False): FrameworkKind.ANGULAR,
        (True, False, True): FrameworkKind.ANGULAR,
        (True, False, False): FrameworkKind.ANGULAR,
        (False, True, True): FrameworkKind.REACT_TS,
        (False, True, False): FrameworkKind.REACT_JS,
        (False, False, True): FrameworkKind.UNKNOWN,
        (False, False, False): FrameworkKind.UNKNOWN,
    }
    return table[(angular, react, ts)]


@pytest.mark.parametrize("angular,react,ts", list(itertools.product([True, False], repeat=3)))
def test_detect_framework_rule_table(angular, react, ts):
    deps = [n for n, on in (("@angular/core", angular), ("react", react), ("typescript", ts)) if on]
    assert detect_framework(_manifest(deps)) is _rule_table_oracle(angular, react, ts)
    # devDependencies count the same as dependencies
    dev = json.dumps({"devDependencies": {d: "*" for d in deps}})
    assert detect_framework(dev) is _rule_table_oracle(angular, react, ts)


@pytest.mark.parametrize("text", ["", "not json", "[1, 2]", '{"dependencies": []}'])
def test_malformed_manifest_is_unknown_with_warning(text):
    sink = DiagnosticSink()
    assert detect_framework(text, sink) is FrameworkKind.UNKNOWN
    assert len(sink.sorted()) == 1


def test_project_framework_uses_precedence(tmp_path):
    _touch(tmp_path, "package.json", _manifest(["react", "typescript"]))
    _touch(tmp_path, "apps/admin/package.json", _manifest(["@angular/core"]))
    entries = scan_project(tmp_path, excludes=[])
    assert detect_project_framework(tmp_path, entries) is FrameworkKind.ANGULAR


def test_project_without_manifest_is_unknown(tmp_path):
    _touch(tmp_path, "a.ts")
    assert detect_project_framework(tmp_path, scan_project(tmp_path, DEFAULT_EXCLUDES)) is FrameworkKind.UNKNOWN
