"""Smells about reaching into other views: raw DOM access and @ViewChild method calls."""

from __future__ import annotations

from ngsmells.detectors.base import Finding, Smell, ThresholdConfig
from ngsmells.frontend.typescript import SyntaxTree
from ngsmells.model import ComponentInfo, ViewChildRef

_NON_COMPONENT_REFS = frozenset({"ElementRef", "TemplateRef", "ViewContainerRef"})


def _element_ref_members(component: ComponentInfo) -> set[str]:
    names = set()
    for m in component.decl.members:
        if m.kind == "property" and m.type is not None and m.type.base_name == "ElementRef":
            names.add(m.name)
        if m.kind == "property" and m.initializer is not None and m.initializer.text.startswith("inject(ElementRef"):
            names.add(m.name)
    for ref in component.view_children:
        if ref.reads_element_ref or (not ref.target_is_class and (ref.type is None or ref.type.text == "any")):
            names.add(ref.member)
    return names


def detect_direct_dom(component: ComponentInfo, tree: SyntaxTree | None = None) -> list[Finding]:
    """Each ``.nativeElement`` dereference of an ElementRef held by the component."""
    tree = tree or component.tree
    held = _element_ref_members(component)
    ctor_refs: set[str] = set()
    ctor = component.decl.constructor
    if ctor is not None:
        for p in ctor.params:
            if p.type is not None and p.type.base_name == "ElementRef":
                ctor_refs.add(p.name)
                if p.modifiers:
                    held.add(p.name)
    findings = []
    for member in component.decl.members:
        if member.body is None:
            continue
        for chain in member.body.chains:
            c = chain.chain
            via_this = len(c) > 2 and c[0] == "this" and c[1] in held and "nativeElement" in c[2:]
            via_param = member.kind == "constructor" and len(c) > 1 and c[0] in ctor_refs and "nativeElement" in c[1:]
            if not (via_this or via_param):
                continue
            start, end = tree.lines(chain.span)
            findings.append(
                Finding(
                    Smell.DIRECT_DOM_MANIPULATION,
                    component.file,
                    start,
                    end,
                    f"{component.class_name}.{member.name}",
                    f"direct DOM access through ElementRef: {chain.text}",
                    {"chain": chain.text},
                )
            )
    return findings


def _child_component_refs(component: ComponentInfo) -> list[ViewChildRef]:
    refs = []
    for ref in component.view_children:
        if ref.reads_element_ref:
            continue
        if ref.type is not None and ref.type.base_name in _NON_COMPONENT_REFS:
            continue
        if not ref.target_is_class and ref.type is None:
            continue
        refs.append(ref)
    return refs


def count_view_child_calls(component: ComponentInfo) -> list[tuple[str, str]]:
    """(ref, method) for every call site of the form ``this.<viewChild>.<method>(...)``."""
    refs = {r.member for r in _child_component_refs(component)}
    sites = []
    for member in component.decl.members:
        if member.body is None:
            continue
        for call in member.body.calls:
            c = call.callee
            if len(c) == 3 and c[0] == "this" and c[1] in refs:
                sites.append((c[1], c[2]))
    return sites


def detect_parent_child_communication(component: ComponentInfo, cfg: ThresholdConfig) -> list[Finding]:
    sites = count_view_child_calls(component)
    if len(sites) < cfg.view_child_min_calls:
        return []
    start, end = component.lines
    return [
        Finding(
            Smell.EXCESSIVE_PARENT_TO_CHILD_COMMUNICATION,
            component.file,
            start,
            end,
            component.class_name,
            f"component calls child methods through @ViewChild at {len(sites)} sites (threshold {cfg.view_child_min_calls})",
            {
                "call_sites": len(sites),
                "threshold": cfg.view_child_min_calls,
                "methods": sorted({f"{ref}.{m}" for ref, m in sites}),
            },
        )
    ]
