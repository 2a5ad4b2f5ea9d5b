"""Text and JSON renderings of an analysis report."""

from __future__ import annotations

import json
from collections import Counter
from dataclasses import dataclass, field
from typing import Any, Sequence

from ngsmells import __version__
from ngsmells.detectors.base import Finding, Smell
from ngsmells.scanner import FrameworkKind

TOOL_NAME = "ng-smells"


@dataclass
class Report:
    framework: FrameworkKind
    files_analyzed: int
    findings: Sequence[Finding]
    diagnostics: Sequence[str] = field(default_factory=list)
    tool_version: str = __version__

    @property
    def summary(self) -> dict[str, int]:
        counts = Counter(f.smell for f in self.findings)
        return {s.value: counts.get(s, 0) for s in Smell}

    @classmethod
    def from_analysis(cls, analysis: Any) -> "Report":
        return cls(analysis.framework, analysis.files_analyzed, list(analysis.findings), list(analysis.diagnostics))


def exit_code(report: Report) -> int:
    return 1 if report.findings else 0


def format_finding(f: Finding) -> str:
    return f"{f.file}:{f.start_line}-{f.end_line} [{f.smell.value}] {f.subject}: {f.message}"


def render_text(report: Report) -> str:
    lines = [
        f"{TOOL_NAME} {report.tool_version} | framework: {report.framework.value} | files analyzed: {report.files_analyzed}",
        "",
    ]
    if not report.findings:
        lines.append("No code smells detected.")
    else:
        lines.extend(format_finding(f) for f in report.findings)
        lines.append("")
        n = len(report.findings)
        lines.append(f"Summary ({n} finding{'' if n == 1 else 's'}):")
        for smell, count in report.summary.items():
            if count:
                lines.append(f"  {smell}: {count}")
    if report.diagnostics:
        lines.append("")
        lines.append(f"Diagnostics ({len(report.diagnostics)}):")
        lines.extend(f"  {d}" for d in report.diagnostics)
    return "\n".join(lines) + "\n"


def finding_to_dict(f: Finding) -> dict[str, Any]:
    return {
        "smell": f.smell.value,
        "file": f.file,
        "start_line": f.start_line,
        "end_line": f.end_line,
        "subject": f.subject,
        "message": f.message,
        "maturity": f.maturity.value,
        "metadata": {k: f.metadata[k] for k in sorted(f.metadata)},
    }


def finding_from_dict(d: dict[str, Any]) -> Finding:
    return Finding(Smell(d["smell"]), d["file"], d["start_line"], d["end_line"], d["subject"], d["message"], d["metadata"])


def report_to_dict(report: Report) -> dict[str, Any]:
    return {
        "tool_version": report.tool_version,
        "framework": report.framework.value,
        "files_analyzed": report.files_analyzed,
        "findings": [finding_to_dict(f) for f in report.findings],
        "summary": report.summary,
        "diagnostics": list(report.diagnostics),
    }


def report_from_dict(d: dict[str, Any]) -> Report:
    return Report(
        framework=FrameworkKind(d["framework"]),
        files_analyzed=d["files_analyzed"],
        findings=[finding_from_dict(f) for f in d["findings"]],
        diagnostics=list(d["diagnostics"]),
        tool_version=d["tool_version"],
    )


def render_json(report: Report) -> str:
    return json.dumps(report_to_dict(report), indent=2, ensure_ascii=False) + "\n"
