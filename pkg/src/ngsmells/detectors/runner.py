from __future__ import annotations

from typing import Iterable, Optional

from ngsmells.detectors.any_type import detect_overusing_any
from ngsmells.detectors.base import Finding, Smell, ThresholdConfig
from ngsmells.detectors.dom import detect_direct_dom, detect_parent_child_communication
from ngsmells.detectors.duplication import detect_duplicated_component
from ngsmells.detectors.inheritance import detect_inheritance
from ngsmells.detectors.prop_drilling import detect_prop_drilling
from ngsmells.detectors.services import detect_coupled_services
from ngsmells.detectors.size import detect_large_component, detect_large_file, detect_too_many_inputs
from ngsmells.detectors.templates import detect_inefficient_method_binding
from ngsmells.diagnostics import DiagnosticSink
from ngsmells.model import ProjectModel, trace_input_chains
from ngsmells.scanner import FrameworkKind

# Outside Angular only the TypeScript-level and file-size detectors apply.
_NON_ANGULAR = frozenset({Smell.OVERUSING_ANY_TYPE, Smell.LARGE_FILE})


def smells_for(framework: FrameworkKind) -> frozenset[Smell]:
    return frozenset(Smell) if framework is FrameworkKind.ANGULAR else _NON_ANGULAR


def run_detectors(
    model: ProjectModel,
    cfg: Optional[ThresholdConfig] = None,
    enabled: Optional[Iterable[Smell]] = None,
    diagnostics: Optional[DiagnosticSink] = None,
) -> list[Finding]:
    """Run every enabled detector the model's framework allows; findings come back sorted."""
    cfg = cfg or ThresholdConfig()
    active = smells_for(model.framework)
    if enabled is not None:
        active = active & frozenset(enabled)
    out: list[Finding] = []
    if Smell.OVERUSING_ANY_TYPE in active:
        for tree in model.trees:
            out += detect_overusing_any(tree, cfg)
    if Smell.LARGE_FILE in active:
        for f in model.files:
            out += detect_large_file(f, cfg)
    for comp in model.components:
        if Smell.LARGE_COMPONENT in active:
            out += detect_large_component(comp, cfg)
        if Smell.TOO_MANY_INPUTS in active:
            out += detect_too_many_inputs(comp, cfg)
        if Smell.INEFFICIENT_METHOD_BINDING in active:
            out += detect_inefficient_method_binding(comp, cfg)
        if Smell.DIRECT_DOM_MANIPULATION in active:
            out += detect_direct_dom(comp)
        if Smell.EXCESSIVE_PARENT_TO_CHILD_COMMUNICATION in active:
            out += detect_parent_child_communication(comp, cfg)
    if Smell.INHERITANCE_INSTEAD_OF_COMPOSITION in active:
        out += detect_inheritance(model.components, cfg, model.classes, model.imports)
    if Smell.COUPLED_SERVICES in active:
        for svc in model.services:
            out += detect_coupled_services(svc, cfg)
    if Smell.PROP_DRILLING in active:
        out += detect_prop_drilling(trace_input_chains(model, diagnostics), cfg, model)
    if Smell.DUPLICATED_COMPONENT in active:
        out += detect_duplicated_component(model.components, cfg)
    return sorted(out, key=Finding.sort_key)
