"""Threshold-based size and count smells."""

from __future__ import annotations

from ngsmells.detectors.base import Finding, Smell, ThresholdConfig
from ngsmells.model import ComponentInfo, FileInfo


def detect_large_component(component: ComponentInfo, cfg: ThresholdConfig) -> list[Finding]:
    if component.class_loc <= cfg.large_component_loc:
        return []
    start, end = component.lines
    return [
        Finding(
            Smell.LARGE_COMPONENT,
            component.file,
            start,
            end,
            component.class_name,
            f"component class spans {component.class_loc} lines (threshold {cfg.large_component_loc})",
            {"loc": component.class_loc, "threshold": cfg.large_component_loc},
        )
    ]


def detect_large_file(file: FileInfo, cfg: ThresholdConfig) -> list[Finding]:
    """LOC over the limit, or (unless ``large_file_loc_only``) too many decorated classes."""
    by_loc = file.loc > cfg.large_file_loc
    by_classes = (not cfg.large_file_loc_only) and file.decorated_class_count >= cfg.large_file_min_decorated_classes
    if not (by_loc or by_classes):
        return []
    reasons = []
    if by_loc:
        reasons.append(f"{file.loc} lines (threshold {cfg.large_file_loc})")
    if by_classes:
        reasons.append(
            f"{file.decorated_class_count} decorated classes (threshold {cfg.large_file_min_decorated_classes})"
        )
    return [
        Finding(
            Smell.LARGE_FILE,
            file.entry.path,
            1,
            max(1, file.loc),
            file.entry.path.rsplit("/", 1)[-1],
            "file has " + " and ".join(reasons),
            {
                "loc": file.loc,
                "decorated_classes": file.decorated_class_count,
                "threshold": cfg.large_file_loc,
                "class_threshold": cfg.large_file_min_decorated_classes,
                "clause": "+".join(c for c, hit in (("loc", by_loc), ("classes", by_classes)) if hit),
            },
        )
    ]


def detect_too_many_inputs(component: ComponentInfo, cfg: ThresholdConfig) -> list[Finding]:
    count = len(component.inputs)
    if count < cfg.too_many_inputs:
        return []
    start, end = component.lines
    return [
        Finding(
            Smell.TOO_MANY_INPUTS,
            component.file,
            start,
            end,
            component.class_name,
            f"component declares {count} @Input properties (threshold {cfg.too_many_inputs})",
            {"count": count, "threshold": cfg.too_many_inputs, "inputs": sorted(i.name for i in component.inputs)},
        )
    ]
