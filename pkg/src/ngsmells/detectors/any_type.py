from __future__ import annotations

from ngsmells.detectors.base import Finding, Smell, ThresholdConfig
from ngsmells.frontend.typescript import SyntaxTree

_LABELS = {
    "property": "property '{}'",
    "parameter": "parameter '{}'",
    "callback-parameter": "callback parameter '{}'",
    "return": "return type of '{}'",
    "variable": "variable '{}'",
}


def detect_overusing_any(tree: SyntaxTree, cfg: ThresholdConfig) -> list[Finding]:
    """One finding per explicit ``any`` in a type position (annotations, generics, casts)."""
    usages = tree.any_usages
    if len(usages) < cfg.any_min_count:
        return []
    findings = []
    for usage in usages:
        line = tree.line_index.line(usage.span.start)
        if usage.kind == "cast":
            subject = usage.subject or "as any"
            message = "expression is cast to any, bypassing type checking"
        elif usage.kind in _LABELS and usage.subject:
            subject = usage.subject
            message = f"{_LABELS[usage.kind].format(usage.subject)} uses the any type"
        else:
            subject = usage.subject or "any"
            message = "explicit any in a type disables type checking"
        findings.append(
            Finding(
                Smell.OVERUSING_ANY_TYPE,
                tree.file.path,
                line,
                line,
                subject,
                message,
                {"kind": usage.kind, "file_total": len(usages)},
            )
        )
    return findings
