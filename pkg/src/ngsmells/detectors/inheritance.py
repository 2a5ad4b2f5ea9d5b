from __future__ import annotations

from typing import Iterable, Mapping

from ngsmells.detectors.base import Finding, Smell, ThresholdConfig
from ngsmells.model import ComponentInfo


def _is_relative(module: str) -> bool:
    return module.startswith(".") or module.startswith("/")


def detect_inheritance(
    components: Iterable[ComponentInfo],
    cfg: ThresholdConfig,
    project_classes: Mapping[str, object],
    imports: Mapping[str, Mapping[str, str]],
) -> list[Finding]:
    """Flag components extending a class declared in the analyzed project.

    Bases that are not declared in the scanned tree, or that the file imports from a
    package (non-relative module), are framework/library classes and stay exempt.
    """
    findings = []
    for comp in components:
        base = comp.decl.extends
        if not base or base not in project_classes:
            continue
        module = imports.get(comp.file, {}).get(base)
        if module is not None and not _is_relative(module):
            continue
        start, end = comp.lines
        findings.append(
            Finding(
                Smell.INHERITANCE_INSTEAD_OF_COMPOSITION,
                comp.file,
                start,
                end,
                comp.class_name,
                f"component class extends user-defined {base}",
                {"base": base},
            )
        )
    return findings
