"""Cross-file project model: components, services, selector graph, injections, input chains."""

from __future__ import annotations

import re
from dataclasses import dataclass, field, replace
from typing import Iterable, Mapping, Optional, Sequence

from ngsmells.diagnostics import DiagnosticSink
from ngsmells.frontend.resolve import FsReader, ResolvedTemplate, TemplateOrigin, resolve_template
from ngsmells.frontend.template import Binding, TemplateAst, parse_template, referenced_names
from ngsmells.frontend.typescript import ClassDecl, Member, Span, SyntaxTree, TypeAnnotation
from ngsmells.scanner import FileEntry, FrameworkKind

_TAG_SELECTOR = re.compile(r"^[A-Za-z][\w-]*$")


@dataclass(frozen=True)
class InputInfo:
    name: str  # the public (bindable) name; differs from ``member`` when aliased
    member: str
    type: Optional[TypeAnnotation]
    span: Span


@dataclass(frozen=True)
class ViewChildRef:
    member: str
    target: str  # class name, or template reference name for string queries
    target_is_class: bool
    type: Optional[TypeAnnotation]
    reads_element_ref: bool
    span: Span


@dataclass(frozen=True)
class Injection:
    name: str  # constructor parameter or field name
    type_name: str
    span: Span
    via_constructor: bool


@dataclass(frozen=True)
class MethodInfo:
    name: str
    statement_count: int
    span: Span


@dataclass(frozen=True)
class ComponentInfo:
    class_name: str
    file: str
    span: Span
    lines: tuple[int, int]
    selector: Optional[str]
    template: TemplateAst
    template_ref: ResolvedTemplate
    inputs: tuple[InputInfo, ...]
    outputs: tuple[str, ...]
    view_children: tuple[ViewChildRef, ...]
    injected: tuple[str, ...]  # project service classes taken via DI
    injections: tuple[Injection, ...]  # every typed constructor parameter / inject() field
    methods: tuple[MethodInfo, ...]
    class_loc: int
    decl: ClassDecl = field(compare=False, repr=False)
    tree: SyntaxTree = field(compare=False, repr=False)

    @property
    def selectors(self) -> tuple[str, ...]:
        return _element_selectors(self.selector)

    def input_named(self, name: str) -> Optional[InputInfo]:
        for i in self.inputs:
            if i.name == name:
                return i
        return None

    @property
    def method_names(self) -> frozenset[str]:
        return frozenset(m.name for m in self.methods)


@dataclass(frozen=True)
class ServiceInfo:
    class_name: str
    file: str
    span: Span
    lines: tuple[int, int]
    public_methods: tuple[str, ...]
    injected_into: tuple[str, ...] = ()
    method_usage: Mapping[str, frozenset[str]] = field(default_factory=dict)


@dataclass(frozen=True)
class FileInfo:
    entry: FileEntry
    decorated_class_count: int
    loc: int


@dataclass(frozen=True)
class Edge:
    parent: str
    child: str
    selector: str
    element: int  # index into the parent's template elements
    bindings: tuple[Binding, ...]
    span: Span  # opening tag, template character offsets
    file: str
    line: int  # 1-based line of the usage in ``file``

    def binding_for(self, input_name: str) -> Optional[Binding]:
        for b in self.bindings:
            if b.target == input_name and b.kind.value in ("Property", "TwoWay"):
                return b
        return None


@dataclass(frozen=True)
class InputChain:
    path: tuple[str, ...]
    input_name: str
    edges: tuple[Edge, ...]

    @property
    def depth(self) -> int:
        return len(self.path) - 1


@dataclass(frozen=True)
class ProjectModel:
    components: tuple[ComponentInfo, ...] = ()
    services: tuple[ServiceInfo, ...] = ()
    files: tuple[FileInfo, ...] = ()
    parent_child: tuple[Edge, ...] = ()
    framework: FrameworkKind = FrameworkKind.UNKNOWN
    classes: Mapping[str, tuple[str, ...]] = field(default_factory=dict)  # class name -> declaring files
    imports: Mapping[str, Mapping[str, str]] = field(default_factory=dict)  # file -> local name -> module
    trees: tuple[SyntaxTree, ...] = field(default=(), compare=False, repr=False)
    diagnostics: tuple[str, ...] = ()

    def component(self, class_name: str) -> Optional[ComponentInfo]:
        for c in self.components:
            if c.class_name == class_name:
                return c
        return None

    def service(self, class_name: str) -> Optional[ServiceInfo]:
        for s in self.services:
            if s.class_name == class_name:
                return s
        return None

    def tree_for(self, path: str) -> Optional[SyntaxTree]:
        for t in self.trees:
            if t.file.path == path:
                return t
        return None


def _element_selectors(selector: Optional[str]) -> tuple[str, ...]:
    if not selector:
        return ()
    return tuple(s.strip() for s in selector.split(",") if _TAG_SELECTOR.match(s.strip()))


def _lines(tree: SyntaxTree, span: Span) -> tuple[int, int]:
    return tree.lines(span)


TemplateMap = Mapping[tuple[str, str], ResolvedTemplate]


def resolve_templates(trees: Iterable[SyntaxTree], fs_reader: FsReader, diagnostics: DiagnosticSink | None = None) -> dict[tuple[str, str], ResolvedTemplate]:
    """Resolve the template of every ``@Component`` class, keyed by (file, class name)."""
    out: dict[tuple[str, str], ResolvedTemplate] = {}
    for tree in trees:
        for cls in tree.classes:
            deco = cls.decorator("Component")
            if deco is not None:
                out[(tree.file.path, cls.name)] = resolve_template(deco.options, tree.file, fs_reader, tree, diagnostics)
    return out


def build_model(
    trees: Sequence[SyntaxTree],
    templates: TemplateMap | None = None,
    framework: FrameworkKind = FrameworkKind.UNKNOWN,
    diagnostics: DiagnosticSink | None = None,
) -> ProjectModel:
    """Merge parsed files into one deterministic project model.

    Components and services are sorted by (class name, file) so the result does not
    depend on the order of ``trees``. The component graph and injection graph are
    filled in before returning.
    """
    sink = diagnostics if diagnostics is not None else DiagnosticSink()
    templates = templates or {}
    ordered = sorted(trees, key=lambda t: t.file.path)
    components: list[ComponentInfo] = []
    services: list[ServiceInfo] = []
    files: list[FileInfo] = []
    classes: dict[str, list[str]] = {}
    imports: dict[str, dict[str, str]] = {}

    for tree in ordered:
        path = tree.file.path
        imports[path] = {name: imp.module for imp in tree.imports for name in imp.names}
        decorated = 0
        for cls in tree.classes:
            classes.setdefault(cls.name, []).append(path)
            if cls.decorators:
                decorated += 1
        files.append(FileInfo(tree.file, decorated, tree.loc))

    service_names = {
        cls.name for tree in ordered for cls in tree.classes
        if cls.decorator("Injectable") is not None and cls.decorator("Component") is None
    }

    for tree in ordered:
        for cls in tree.classes:
            is_component = cls.decorator("Component") is not None
            if is_component:
                if cls.decorator("Injectable") is not None:
                    sink.warn(tree.file.path, f"{cls.name} has both @Component and @Injectable; treated as a component")
                resolved = templates.get((tree.file.path, cls.name)) or ResolvedTemplate("", TemplateOrigin.NONE, tree.file.path, 1)
                components.append(_component(tree, cls, resolved, service_names, sink))
            elif cls.decorator("Injectable") is not None:
                public = tuple(
                    m.name for m in cls.members
                    if m.kind == "method" and not ({"private", "protected"} & set(m.modifiers)) and not m.name.startswith("#")
                )
                services.append(ServiceInfo(cls.name, tree.file.path, cls.span, _lines(tree, cls.span), public))

    components.sort(key=lambda c: (c.class_name, c.file))
    services.sort(key=lambda s: (s.class_name, s.file))

    seen: dict[str, str] = {}
    for comp in components:
        for sel in comp.selectors:
            if sel in seen:
                sink.warn(comp.file, f"selector '{sel}' of {comp.class_name} is also used by {seen[sel]}")
            else:
                seen[sel] = comp.class_name

    model = ProjectModel(
        components=tuple(components),
        services=tuple(services),
        files=tuple(files),
        framework=framework,
        classes={k: tuple(v) for k, v in sorted(classes.items())},
        imports=imports,
        trees=tuple(ordered),
    )
    model = replace(model, parent_child=build_component_graph(model))
    model = replace(model, services=build_injection_graph(model))
    return replace(model, diagnostics=tuple(str(d) for d in sink.sorted()))


def _string_arg(member: Member, decorator: str) -> Optional[str]:
    deco = member.decorator(decorator)
    if deco is None or not deco.args:
        return None
    first = deco.args[0]
    if first.kind == "string":
        return first.value
    alias = first.get("alias") if first.kind == "object" else None
    return alias.value if alias is not None and alias.kind == "string" else None


def _signal_call(member: Member) -> Optional[str]:
    """``input<T>()`` / ``input.required<T>()`` / ``output<T>()`` initializers."""
    init = member.initializer
    if init is None or member.body is None:
        return None
    for call in member.body.calls:
        if call.span == init.span and call.callee and call.callee[0] in ("input", "output", "model"):
            if len(call.callee) == 1 or call.callee[1:] == ("required",):
                return call.callee[0]
    return None


def _component(tree: SyntaxTree, cls: ClassDecl, resolved: ResolvedTemplate, service_names: set[str], sink: DiagnosticSink) -> ComponentInfo:
    deco = cls.decorator("Component")
    assert deco is not None
    opts = deco.options
    sel_expr = opts.get("selector")
    selector = sel_expr.value if sel_expr is not None and sel_expr.kind == "string" else None

    template = parse_template(resolved.source)
    for w in template.warnings:
        sink.warn(resolved.path, f"{cls.name}: {w}")

    inputs: list[InputInfo] = []
    outputs: list[str] = []
    view_children: list[ViewChildRef] = []
    injections: list[Injection] = []
    methods: list[MethodInfo] = []

    for m in cls.members:
        if m.decorator("Input") is not None:
            inputs.append(InputInfo(_string_arg(m, "Input") or m.name, m.name, m.type, m.span))
        elif m.kind == "property" and _signal_call(m) in ("input", "model"):
            inputs.append(InputInfo(m.name, m.name, m.type, m.span))
        if m.decorator("Output") is not None:
            outputs.append(_string_arg(m, "Output") or m.name)
        elif m.kind == "property" and _signal_call(m) == "output":
            outputs.append(m.name)
        vc = m.decorator("ViewChild")
        if vc is not None and vc.args:
            first = vc.args[0]
            read = vc.options.get("read")
            view_children.append(
                ViewChildRef(
                    member=m.name,
                    target=first.value if first.kind == "string" and first.value is not None else first.text,
                    target_is_class=first.kind == "identifier",
                    type=m.type,
                    reads_element_ref=read is not None and read.text == "ElementRef",
                    span=m.span,
                )
            )
        if m.kind in ("method", "accessor"):
            methods.append(MethodInfo(m.name, len(m.body.statements) if m.body else 0, m.span))
        if m.kind == "property" and m.body is not None and m.initializer is not None:
            for call in m.body.calls:
                if call.callee == ("inject",) and call.span == m.initializer.span:
                    arg = m.initializer.text[m.initializer.text.find("(") + 1:].split(",")[0].strip(" )")
                    injections.append(Injection(m.name, arg, m.span, False))

    for extra in opts.get("inputs").items if opts.get("inputs") is not None else ():
        if extra.kind == "string" and extra.value:
            public = extra.value.split(":")[-1].strip()
            inputs.append(InputInfo(public, extra.value.split(":")[0].strip(), None, extra.span))

    ctor = cls.constructor
    if ctor is not None:
        for p in ctor.params:
            if p.type is not None:
                injections.append(Injection(p.name, p.type.base_name, p.span, True))

    return ComponentInfo(
        class_name=cls.name,
        file=tree.file.path,
        span=cls.span,
        lines=_lines(tree, cls.span),
        selector=selector,
        template=template,
        template_ref=resolved,
        inputs=tuple(inputs),
        outputs=tuple(outputs),
        view_children=tuple(view_children),
        injected=tuple(i.type_name for i in injections if i.type_name in service_names),
        injections=tuple(injections),
        methods=tuple(methods),
        class_loc=_lines(tree, cls.span)[1] - _lines(tree, cls.span)[0] + 1,
        decl=cls,
        tree=tree,
    )


def build_component_graph(model: ProjectModel) -> tuple[Edge, ...]:
    """Parent->child edges wherever a component's selector is used as an element tag."""
    by_selector: dict[str, list[str]] = {}
    for comp in model.components:
        for sel in comp.selectors:
            by_selector.setdefault(sel, []).append(comp.class_name)
    edges: list[Edge] = []
    for parent in model.components:
        tmpl = parent.template
        for idx, element in enumerate(tmpl.elements):
            for child in by_selector.get(element.tag, ()):
                edges.append(
                    Edge(
                        parent=parent.class_name,
                        child=child,
                        selector=element.tag,
                        element=idx,
                        bindings=tuple(tmpl.bindings_of(idx)),
                        span=element.span,
                        file=parent.template_ref.path,
                        line=parent.template_ref.file_line(tmpl.line_of(element.span.start)),
                    )
                )
    return tuple(edges)


def _service_calls(comp: ComponentInfo, injection: Injection) -> set[str]:
    used: set[str] = set()
    for member in comp.decl.members:
        if member.body is None:
            continue
        for call in member.body.calls:
            c = call.callee
            if len(c) == 3 and c[0] == "this" and c[1] == injection.name:
                used.add(c[2])
            elif member.kind == "constructor" and injection.via_constructor and len(c) == 2 and c[0] == injection.name:
                used.add(c[1])
    return used


def build_injection_graph(model: ProjectModel) -> tuple[ServiceInfo, ...]:
    """Return the services with ``injected_into`` and ``method_usage`` filled in."""
    out = []
    for svc in model.services:
        into: list[str] = []
        usage: dict[str, frozenset[str]] = {}
        for comp in model.components:
            injs = [i for i in comp.injections if i.type_name == svc.class_name]
            if not injs:
                continue
            into.append(comp.class_name)
            used: set[str] = set()
            for inj in injs:
                used |= _service_calls(comp, inj)
            usage[comp.class_name] = frozenset(used)
        out.append(replace(svc, injected_into=tuple(sorted(into)), method_usage=dict(sorted(usage.items()))))
    return tuple(out)


def _uses_input(comp: ComponentInfo, member: str, public: str, passthrough: set[Span]) -> bool:
    """Does ``comp`` read the input other than by forwarding it unchanged?"""
    for expr, span in comp.template.expressions():
        if span in passthrough:
            continue
        names = referenced_names(expr)
        if member in names:
            return True
    for m in comp.decl.members:
        if m.body is None:
            continue
        for chain in m.body.chains:
            if chain.chain[:2] == ("this", member):
                return True
    return False


def _passthrough(model: ProjectModel, comp: ComponentInfo, edge: Edge, name: str) -> Optional[Binding]:
    """The binding on ``edge`` that forwards ``comp``'s input ``name`` unchanged, if any."""
    child = model.component(edge.child)
    if child is None or child.input_named(name) is None or comp.input_named(name) is None:
        return None
    b = edge.binding_for(name)
    if b is None or b.expression != comp.input_named(name).member:  # type: ignore[union-attr]
        return None
    return b


def trace_input_chains(model: ProjectModel, diagnostics: DiagnosticSink | None = None) -> list[InputChain]:
    """Maximal chains of unchanged input forwarding through non-consuming intermediaries."""
    sink = diagnostics if diagnostics is not None else DiagnosticSink()
    outgoing: dict[str, list[Edge]] = {}
    for e in model.parent_child:
        outgoing.setdefault(e.parent, []).append(e)

    def forwards(comp_name: str, name: str) -> list[tuple[Edge, Binding]]:
        comp = model.component(comp_name)
        if comp is None:
            return []
        found = []
        for e in outgoing.get(comp_name, ()):
            b = _passthrough(model, comp, e, name)
            if b is not None:
                found.append((e, b))
        return found

    def is_intermediary(comp_name: str, name: str) -> bool:
        comp = model.component(comp_name)
        if comp is None:
            return False
        fw = forwards(comp_name, name)
        if not fw:
            return False
        inp = comp.input_named(name)
        assert inp is not None
        return not _uses_input(comp, inp.member, name, {b.expression_span for _, b in fw})

    chains: list[InputChain] = []

    def extend(path: list[str], edges: list[Edge], name: str) -> None:
        last = path[-1]
        nexts = forwards(last, name) if is_intermediary(last, name) else []
        grew = False
        for e, _b in nexts:
            if e.child in path:
                sink.warn(e.file, f"input '{name}' forwarding cycle through {' -> '.join(path + [e.child])} broken")
                continue
            grew = True
            extend(path + [e.child], edges + [e], name)
        if not grew:
            chains.append(InputChain(tuple(path), name, tuple(edges)))

    for e in model.parent_child:
        parent = model.component(e.parent)
        child = model.component(e.child)
        if parent is None or child is None:
            continue
        for b in e.bindings:
            if b.kind.value not in ("Property", "TwoWay") or child.input_named(b.target) is None:
                continue
            # an edge that merely forwards from a pure intermediary continues a chain instead of starting one
            if _passthrough(model, parent, e, b.target) is not None and is_intermediary(e.parent, b.target):
                continue
            extend([e.parent, e.child], [e], b.target)
    chains.sort(key=lambda c: (c.path, c.input_name))
    return chains
