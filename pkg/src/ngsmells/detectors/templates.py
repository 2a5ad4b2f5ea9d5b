from __future__ import annotations

from ngsmells.detectors.base import Finding, Smell, ThresholdConfig
from ngsmells.frontend.template import BindingKind, called_names
from ngsmells.model import ComponentInfo

_REEVALUATED = (BindingKind.PROPERTY, BindingKind.ATTRIBUTE, BindingKind.TWO_WAY)


def _is_onpush(component: ComponentInfo) -> bool:
    deco = component.decl.decorator("Component")
    strategy = deco.options.get("changeDetection") if deco is not None else None
    return strategy is not None and strategy.text.endswith("OnPush")


def detect_inefficient_method_binding(component: ComponentInfo, cfg: ThresholdConfig | None = None) -> list[Finding]:
    """Component methods called from interpolations, property bindings or structural directives.

    Event bindings are the intended place for method calls and are never flagged.
    """
    if cfg is not None and cfg.exempt_onpush and _is_onpush(component):
        return []
    methods = component.method_names
    tmpl = component.template
    sites: list[tuple[str, int]] = []  # (expression, absolute offset of expression start)
    sites += [(i.expression, i.span.start) for i in tmpl.interpolations]
    sites += [(b.expression, b.expression_span.start) for b in tmpl.bindings if b.kind in _REEVALUATED]
    sites += [(d.expression, d.span.start) for d in tmpl.structural_directives]
    findings = []
    for expr, offset in sorted(sites, key=lambda s: s[1]):
        for name, pos in called_names(expr):
            if name not in methods:
                continue
            line = component.template_ref.file_line(tmpl.line_of(offset + pos))
            findings.append(
                Finding(
                    Smell.INEFFICIENT_METHOD_BINDING,
                    component.template_ref.path,
                    line,
                    line,
                    f"{component.class_name}.{name}",
                    f"template calls {name}() on every change detection cycle",
                    {"expression": expr, "method": name},
                )
            )
    return findings
