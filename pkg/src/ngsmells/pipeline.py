"""End-to-end analysis: scan, parse, model, detect."""

from __future__ import annotations

import os
from dataclasses import dataclass, field
from pathlib import Path
from typing import Callable, Iterable, Mapping, Optional, Sequence

from ngsmells.detectors.base import Finding, Smell, ThresholdConfig
from ngsmells.detectors.runner import run_detectors
from ngsmells.diagnostics import DiagnosticSink
from ngsmells.errors import ParseError
from ngsmells.frontend.typescript import SyntaxTree, parse_typescript
from ngsmells.model import ProjectModel, build_model, resolve_templates
from ngsmells.scanner import (
    DEFAULT_EXCLUDES,
    FileEntry,
    FileKind,
    FrameworkKind,
    detect_framework,
    detect_project_framework,
    scan_project,
)


@dataclass
class Analysis:
    framework: FrameworkKind
    files_analyzed: int
    findings: list[Finding]
    model: ProjectModel
    diagnostics: list[str] = field(default_factory=list)
    parse_failures: list[str] = field(default_factory=list)


def parse_all(entries: Iterable[FileEntry], read: Callable[[str], str], sink: DiagnosticSink) -> tuple[list[SyntaxTree], list[str]]:
    trees: list[SyntaxTree] = []
    failures: list[str] = []
    for entry in entries:
        if entry.kind is not FileKind.TYPESCRIPT:
            continue
        try:
            source = read(entry.path)
        except UnicodeDecodeError:
            sink.warn(entry.path, "not valid UTF-8; skipped")
            failures.append(entry.path)
            continue
        except OSError as exc:
            sink.warn(entry.path, f"unreadable ({exc.strerror or exc}); skipped")
            failures.append(entry.path)
            continue
        try:
            trees.append(parse_typescript(entry, source))
        except ParseError as exc:
            sink.warn(entry.path, f"parse error at {exc.line}:{exc.column}: {exc.message}; file skipped")
            failures.append(entry.path)
    return trees, failures


def _analyze(
    entries: Sequence[FileEntry],
    read: Callable[[str], str],
    framework: FrameworkKind,
    cfg: ThresholdConfig,
    enabled: Optional[Iterable[Smell]],
    sink: DiagnosticSink,
) -> Analysis:
    trees, failures = parse_all(entries, read, sink)
    templates = resolve_templates(trees, read, sink)
    model = build_model(trees, templates, framework, sink)
    findings = run_detectors(model, cfg, enabled, sink)
    return Analysis(framework, len(trees), findings, model, [str(d) for d in sink.sorted()], failures)


def analyze_project(
    root: str | os.PathLike[str],
    cfg: Optional[ThresholdConfig] = None,
    enabled: Optional[Iterable[Smell]] = None,
    framework: Optional[FrameworkKind] = None,
    excludes: Sequence[str] = DEFAULT_EXCLUDES,
) -> Analysis:
    """Analyze a project directory. ``framework`` overrides manifest-based detection."""
    sink = DiagnosticSink()
    entries = scan_project(root, excludes)
    if framework is None:
        framework = detect_project_framework(root, entries, sink)
    base = Path(root)

    def read(path: str) -> str:
        return (base / path).read_text(encoding="utf-8")

    return _analyze(entries, read, framework, cfg or ThresholdConfig(), enabled, sink)


def analyze_sources(
    files: Mapping[str, str],
    cfg: Optional[ThresholdConfig] = None,
    enabled: Optional[Iterable[Smell]] = None,
    framework: Optional[FrameworkKind] = FrameworkKind.ANGULAR,
) -> Analysis:
    """Analyze in-memory files keyed by relative path. ``framework=None`` reads ``package.json``."""
    sink = DiagnosticSink()
    entries = sorted((FileEntry.for_path(p, len(t.encode("utf-8"))) for p, t in files.items()), key=lambda e: e.path)
    by_path = {FileEntry.for_path(p).path: text for p, text in files.items()}
    if framework is None:
        framework = FrameworkKind.UNKNOWN
        if "package.json" in by_path:
            framework = detect_framework(by_path["package.json"], sink)

    def read(path: str) -> str:
        try:
            return by_path[path]
        except KeyError:
            raise FileNotFoundError(path) from None

    return _analyze(entries, read, framework, cfg or ThresholdConfig(), enabled, sink)
