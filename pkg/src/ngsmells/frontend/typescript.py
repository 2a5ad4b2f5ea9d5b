"""TypeScript parsing: tree-sitter concrete syntax lowered into a small declaration model.

Only the constructs the detectors need are modelled (imports, exports, classes with
decorators/heritage/members, interfaces, functions, variables, and per-body call and
member-access chains). Everything else survives as an :class:`OpaqueNode` carrying
its span, so no source region silently disappears.

All spans are UTF-8 byte offsets into the original source.
"""

from __future__ import annotations

import bisect
from dataclasses import dataclass, field
from functools import lru_cache
from typing import Iterator, Optional, Union

import tree_sitter_typescript as ts_typescript
from tree_sitter import Language, Node, Parser

from ngsmells.errors import ParseError
from ngsmells.scanner import FileEntry, FileKind


@dataclass(frozen=True, order=True)
class Span:
    start: int
    end: int

    @classmethod
    def of(cls, node: Node) -> "Span":
        return cls(node.start_byte, node.end_byte)


class LineIndex:
    """Maps byte offsets to 1-based (line, column) pairs."""

    def __init__(self, source: bytes) -> None:
        self._starts = [0]
        pos = source.find(b"\n")
        while pos != -1:
            self._starts.append(pos + 1)
            pos = source.find(b"\n", pos + 1)
        self._length = len(source)

    @property
    def line_count(self) -> int:
        return len(self._starts)

    def position(self, offset: int) -> tuple[int, int]:
        if not 0 <= offset <= self._length:
            raise ValueError(f"offset {offset} outside source of length {self._length}")
        line = bisect.bisect_right(self._starts, offset) - 1
        return line + 1, offset - self._starts[line] + 1

    def line(self, offset: int) -> int:
        return self.position(offset)[0]

    def offset(self, line: int, column: int) -> int:
        return self._starts[line - 1] + column - 1

    def lines(self, span: Span) -> tuple[int, int]:
        """First and last line touched by ``span`` (an end offset right after a newline stays on that line)."""
        end = max(span.start, span.end - 1)
        return self.line(span.start), self.line(end)


@dataclass(frozen=True)
class TypeAnnotation:
    text: str  # whitespace-collapsed source of the type
    span: Span
    any_count: int = 0

    @property
    def is_any(self) -> bool:
        return self.text == "any"

    @property
    def is_any_array(self) -> bool:
        return self.text in ("any[]", "Array<any>")

    @property
    def base_name(self) -> str:
        """``ElementRef<HTMLDivElement>`` -> ``ElementRef``."""
        return self.text.split("<", 1)[0].strip()


@dataclass(frozen=True)
class Expr:
    """An expression kept at the level of detail decorators need.

    kind is one of ``string``, ``identifier``, ``object``, ``array`` or ``opaque``.
    For strings ``value`` holds the literal's contents and ``value_span`` where they sit.
    """

    kind: str
    text: str
    span: Span
    value: Optional[str] = None
    value_span: Optional[Span] = None
    entries: tuple[tuple[str, "Expr"], ...] = ()
    items: tuple["Expr", ...] = ()

    def get(self, key: str) -> Optional["Expr"]:
        for k, v in self.entries:
            if k == key:
                return v
        return None


@dataclass(frozen=True)
class Decorator:
    name: str  # verbatim callee text, e.g. "Component" or "core.Component"
    args: tuple[Expr, ...]
    span: Span

    @property
    def simple_name(self) -> str:
        return self.name.rsplit(".", 1)[-1]

    @property
    def options(self) -> dict[str, Expr]:
        """Key/value pairs of the first object-literal argument."""
        for arg in self.args:
            if arg.kind == "object":
                return dict(arg.entries)
        return {}


@dataclass(frozen=True)
class Parameter:
    name: str
    type: Optional[TypeAnnotation]
    modifiers: tuple[str, ...]
    decorators: tuple[Decorator, ...]
    span: Span


@dataclass(frozen=True)
class CallSite:
    """A call expression; ``callee`` is the textual chain, e.g. ``("this", "child", "update")``.

    Segments that are not plain names are rendered as ``()`` (a call result), ``[]``
    (an index) or ``<expr>``.
    """

    callee: tuple[str, ...]
    span: Span


@dataclass(frozen=True)
class MemberChain:
    chain: tuple[str, ...]
    span: Span

    @property
    def text(self) -> str:
        return ".".join(self.chain).replace(".()", "()").replace(".[]", "[]")


@dataclass(frozen=True)
class Statement:
    kind: str
    span: Span


@dataclass(frozen=True)
class Body:
    statements: tuple[Statement, ...] = ()
    calls: tuple[CallSite, ...] = ()
    chains: tuple[MemberChain, ...] = ()


@dataclass(frozen=True)
class ArrowFunction:
    params: tuple[Parameter, ...]
    return_type: Optional[TypeAnnotation]
    span: Span


@dataclass(frozen=True)
class Member:
    """A class member. kind: ``property``, ``method``, ``accessor``, ``constructor`` or ``index``."""

    kind: str
    name: str
    span: Span
    decorators: tuple[Decorator, ...] = ()
    modifiers: tuple[str, ...] = ()
    type: Optional[TypeAnnotation] = None
    params: tuple[Parameter, ...] = ()
    return_type: Optional[TypeAnnotation] = None
    initializer: Optional[Expr] = None
    body: Optional[Body] = None

    def decorator(self, name: str) -> Optional[Decorator]:
        for d in self.decorators:
            if d.simple_name == name:
                return d
        return None


@dataclass(frozen=True)
class ClassDecl:
    name: str
    decorators: tuple[Decorator, ...]
    extends: Optional[str]
    implements: tuple[str, ...]
    is_abstract: bool
    members: tuple[Member, ...]
    span: Span
    exported: bool = False

    def decorator(self, name: str) -> Optional[Decorator]:
        for d in self.decorators:
            if d.simple_name == name:
                return d
        return None

    @property
    def constructor(self) -> Optional[Member]:
        for m in self.members:
            if m.kind == "constructor":
                return m
        return None


@dataclass(frozen=True)
class InterfaceDecl:
    name: str
    extends: tuple[str, ...]
    members: tuple[tuple[str, Optional[TypeAnnotation]], ...]
    span: Span
    exported: bool = False


@dataclass(frozen=True)
class ImportDecl:
    module: str
    names: tuple[str, ...]  # local bindings
    span: Span


@dataclass(frozen=True)
class ExportDecl:
    """A re-export or export list without an inline declaration."""

    names: tuple[str, ...]
    module: Optional[str]
    span: Span


@dataclass(frozen=True)
class FunctionDecl:
    name: str
    params: tuple[Parameter, ...]
    return_type: Optional[TypeAnnotation]
    body: Body
    span: Span
    exported: bool = False


@dataclass(frozen=True)
class VariableDecl:
    name: str
    keyword: str
    type: Optional[TypeAnnotation]
    initializer: Optional[Expr]
    span: Span
    exported: bool = False


@dataclass(frozen=True)
class OpaqueNode:
    kind: str
    span: Span


Declaration = Union[ClassDecl, InterfaceDecl, ImportDecl, ExportDecl, FunctionDecl, VariableDecl, OpaqueNode]


@dataclass(frozen=True)
class AnyUsage:
    """One explicit ``any`` in a type position.

    kind: ``property``, ``parameter``, ``callback-parameter``, ``return``, ``variable``,
    ``cast``, ``type-argument`` or ``other``; ``subject`` names the declaration it types.
    """

    kind: str
    subject: str
    span: Span


@dataclass
class SyntaxTree:
    file: FileEntry
    source: bytes
    roots: list[Declaration]
    line_index: LineIndex
    any_usages: list[AnyUsage] = field(default_factory=list)
    arrow_functions: list[ArrowFunction] = field(default_factory=list)

    def text(self, span: Span) -> str:
        return self.source[span.start:span.end].decode("utf-8")

    @property
    def classes(self) -> list[ClassDecl]:
        return [r for r in self.roots if isinstance(r, ClassDecl)]

    @property
    def imports(self) -> list[ImportDecl]:
        return [r for r in self.roots if isinstance(r, ImportDecl)]

    @property
    def loc(self) -> int:
        """Physical line count, blanks and comments included."""
        return len(self.source.decode("utf-8").splitlines())

    def lines(self, span: Span) -> tuple[int, int]:
        return self.line_index.lines(span)


@lru_cache(maxsize=2)
def _parser(tsx: bool) -> Parser:
    lang = ts_typescript.language_tsx() if tsx else ts_typescript.language_typescript()
    return Parser(Language(lang))


def parse_typescript(entry: FileEntry, source: str | bytes) -> SyntaxTree:
    """Parse one TypeScript file. Raises :class:`ParseError` on syntax errors."""
    if entry.kind is not FileKind.TYPESCRIPT:
        raise ValueError(f"{entry.path} is not a TypeScript source")
    data = source.encode("utf-8") if isinstance(source, str) else source
    tree = _parser(entry.path.endswith(".tsx")).parse(data)
    index = LineIndex(data)
    root = tree.root_node
    if root.has_error:
        bad = _first_error(root)
        line, col = index.position(bad.start_byte)
        if bad.is_missing:
            msg = f"missing '{bad.type}'"
        else:
            snippet = data[bad.start_byte:bad.end_byte].decode("utf-8", "replace").split("\n", 1)[0][:30]
            msg = f"unexpected syntax near '{snippet}'"
        raise ParseError(entry.path, line, col, msg)
    lowering = _Lowering(data)
    roots = [d for child in root.named_children for d in lowering.top_level(child)]
    out = SyntaxTree(entry, data, roots, index)
    out.any_usages = lowering.collect_any(root)
    out.arrow_functions = lowering.arrows
    return out


def _first_error(node: Node) -> Node:
    stack = [node]
    while stack:
        n = stack.pop()
        if n.is_error or n.is_missing:
            return n
        stack.extend(reversed(n.children))
    return node


def _first_non_decorator(node: Node) -> Node:
    for c in node.children:
        if c.type not in ("decorator", "comment"):
            return c
    return node


def _walk(node: Node) -> Iterator[Node]:
    stack = [node]
    while stack:
        n = stack.pop()
        yield n
        stack.extend(reversed(n.children))


_CLASS_TYPES = ("class_declaration", "abstract_class_declaration", "class")
_CHAIN_TYPES = ("member_expression", "call_expression", "non_null_expression", "subscript_expression")


class _Lowering:
    def __init__(self, source: bytes) -> None:
        self.source = source
        self.arrows: list[ArrowFunction] = []

    def text(self, node: Node) -> str:
        return self.source[node.start_byte:node.end_byte].decode("utf-8")

    # -- top level ---------------------------------------------------------

    def top_level(self, node: Node, exported: bool = False, decorators: tuple[Decorator, ...] = ()) -> list[Declaration]:
        t = node.type
        if t == "import_statement":
            return [self.import_decl(node)]
        if t == "export_statement":
            decl = node.child_by_field_name("declaration")
            decs = tuple(self.decorator(c) for c in node.children if c.type == "decorator")
            if decl is not None:
                return self.top_level(decl, exported=True, decorators=decs)
            value = node.child_by_field_name("value")
            if value is not None and value.type in _CLASS_TYPES:
                return self.top_level(value, exported=True, decorators=decs)
            return [self.export_decl(node)]
        if t in _CLASS_TYPES:
            return [self.class_decl(node, exported, decorators)]
        if t == "interface_declaration":
            return [self.interface_decl(node, exported)]
        if t in ("function_declaration", "generator_function_declaration"):
            return [self.function_decl(node, exported)]
        if t in ("lexical_declaration", "variable_declaration"):
            keyword = node.children[0].type if node.children else "var"
            return [self.variable_decl(d, keyword, exported) for d in node.named_children if d.type == "variable_declarator"]
        if t == "comment":
            return []
        return [OpaqueNode(t, Span.of(node))]

    def import_decl(self, node: Node) -> ImportDecl:
        src = node.child_by_field_name("source")
        module = self.string_value(src) if src is not None else ""
        names: list[str] = []
        for n in _walk(node):
            if n.type == "import_specifier":
                alias = n.child_by_field_name("alias") or n.child_by_field_name("name")
                if alias is not None:
                    names.append(self.text(alias))
            elif n.type == "namespace_import":
                ids = [c for c in n.named_children if c.type == "identifier"]
                if ids:
                    names.append(self.text(ids[-1]))
            elif n.type == "import_clause":
                for c in n.named_children:
                    if c.type == "identifier":
                        names.append(self.text(c))
        return ImportDecl(module, tuple(names), Span.of(node))

    def export_decl(self, node: Node) -> ExportDecl:
        names = []
        for n in _walk(node):
            if n.type == "export_specifier":
                name = n.child_by_field_name("alias") or n.child_by_field_name("name")
                if name is not None:
                    names.append(self.text(name))
        src = node.child_by_field_name("source")
        return ExportDecl(tuple(names), self.string_value(src) if src is not None else None, Span.of(node))

    def class_decl(self, node: Node, exported: bool, outer_decorators: tuple[Decorator, ...]) -> ClassDecl:
        decorators = list(outer_decorators)
        decorators.extend(self.decorator(c) for c in node.children if c.type == "decorator")
        name_node = node.child_by_field_name("name")
        name = self.text(name_node) if name_node is not None else "default"
        extends: Optional[str] = None
        implements: list[str] = []
        for c in node.children:
            if c.type != "class_heritage":
                continue
            for h in c.named_children:
                if h.type == "extends_clause":
                    value = h.child_by_field_name("value")
                    if value is not None:
                        extends = self.text(value)
                elif h.type == "implements_clause":
                    implements.extend(self.text(x) for x in h.named_children)
        body = node.child_by_field_name("body")
        members = self.class_members(body) if body is not None else []
        return ClassDecl(
            name=name,
            decorators=tuple(decorators),
            extends=extends,
            implements=tuple(implements),
            is_abstract=node.type == "abstract_class_declaration",
            members=tuple(members),
            span=Span(_first_non_decorator(node).start_byte, node.end_byte),
            exported=exported,
        )

    def class_members(self, body: Node) -> list[Member]:
        members: list[Member] = []
        pending: list[Decorator] = []
        for c in body.named_children:
            t = c.type
            if t == "decorator":
                pending.append(self.decorator(c))
                continue
            if t == "comment":
                continue
            if t == "public_field_definition":
                members.append(self.field_member(c, tuple(pending)))
            elif t in ("method_definition", "abstract_method_signature", "method_signature"):
                members.append(self.method_member(c, tuple(pending)))
            else:
                members.append(Member("index" if "index" in t else t, "", Span.of(c), tuple(pending)))
            pending = []
        return members

    def field_member(self, node: Node, extra: tuple[Decorator, ...]) -> Member:
        decorators = extra + tuple(self.decorator(c) for c in node.children if c.type == "decorator")
        name_node = node.child_by_field_name("name")
        type_node = node.child_by_field_name("type")
        value = node.child_by_field_name("value")
        body = self.body(value) if value is not None else None
        return Member(
            kind="property",
            name=self.text(name_node) if name_node is not None else "",
            span=Span.of(node),
            decorators=decorators,
            modifiers=self.modifiers(node),
            type=self.annotation(type_node) if type_node is not None else None,
            initializer=self.expr(value) if value is not None else None,
            body=body,
        )

    def method_member(self, node: Node, decorators: tuple[Decorator, ...]) -> Member:
        name_node = node.child_by_field_name("name")
        name = self.text(name_node) if name_node is not None else ""
        if name == "constructor":
            kind = "constructor"
        elif any(c.type in ("get", "set") for c in node.children):
            kind = "accessor"
        else:
            kind = "method"
        params = node.child_by_field_name("parameters")
        ret = node.child_by_field_name("return_type")
        block = node.child_by_field_name("body")
        return Member(
            kind=kind,
            name=name,
            span=Span.of(node),
            decorators=decorators,
            modifiers=self.modifiers(node),
            params=self.parameters(params) if params is not None else (),
            return_type=self.annotation(ret) if ret is not None else None,
            body=self.body(block) if block is not None else None,
        )

    def interface_decl(self, node: Node, exported: bool) -> InterfaceDecl:
        name_node = node.child_by_field_name("name")
        extends: list[str] = []
        members: list[tuple[str, Optional[TypeAnnotation]]] = []
        for c in node.named_children:
            if c.type == "extends_type_clause":
                extends.extend(self.text(x) for x in c.named_children)
        body = node.child_by_field_name("body")
        if body is not None:
            for m in body.named_children:
                if m.type in ("property_signature", "method_signature"):
                    n = m.child_by_field_name("name")
                    ty = m.child_by_field_name("type") or m.child_by_field_name("return_type")
                    members.append((self.text(n) if n is not None else "", self.annotation(ty) if ty is not None else None))
        return InterfaceDecl(self.text(name_node) if name_node else "", tuple(extends), tuple(members), Span.of(node), exported)

    def function_decl(self, node: Node, exported: bool) -> FunctionDecl:
        name_node = node.child_by_field_name("name")
        params = node.child_by_field_name("parameters")
        ret = node.child_by_field_name("return_type")
        block = node.child_by_field_name("body")
        return FunctionDecl(
            self.text(name_node) if name_node is not None else "default",
            self.parameters(params) if params is not None else (),
            self.annotation(ret) if ret is not None else None,
            self.body(block) if block is not None else Body(),
            Span.of(node),
            exported,
        )

    def variable_decl(self, node: Node, keyword: str, exported: bool) -> VariableDecl:
        name_node = node.child_by_field_name("name")
        type_node = node.child_by_field_name("type")
        value = node.child_by_field_name("value")
        return VariableDecl(
            self.text(name_node) if name_node is not None else "",
            keyword,
            self.annotation(type_node) if type_node is not None else None,
            self.expr(value) if value is not None else None,
            Span.of(node),
            exported,
        )

    # -- pieces --------------------------------------------------------------

    def modifiers(self, node: Node) -> tuple[str, ...]:
        mods = []
        for c in node.children:
            if c.type == "accessibility_modifier":
                mods.append(self.text(c))
            elif c.type in ("static", "readonly", "abstract", "override", "async", "declare", "override_modifier"):
                mods.append(self.text(c))
        return tuple(mods)

    def decorator(self, node: Node) -> Decorator:
        inner = node.named_children[0] if node.named_children else node
        if inner.type == "call_expression":
            fn = inner.child_by_field_name("function")
            args_node = inner.child_by_field_name("arguments")
            args = tuple(self.expr(a) for a in args_node.named_children if a.type != "comment") if args_node is not None else ()
            return Decorator(self.text(fn) if fn is not None else "", args, Span.of(node))
        return Decorator(self.text(inner), (), Span.of(node))

    def parameters(self, node: Node) -> tuple[Parameter, ...]:
        out = []
        for p in node.named_children:
            if p.type not in ("required_parameter", "optional_parameter"):
                continue
            pattern = p.child_by_field_name("pattern")
            type_node = p.child_by_field_name("type")
            out.append(
                Parameter(
                    name=self.text(pattern) if pattern is not None else "",
                    type=self.annotation(type_node) if type_node is not None else None,
                    modifiers=self.modifiers(p),
                    decorators=tuple(self.decorator(c) for c in p.children if c.type == "decorator"),
                    span=Span.of(p),
                )
            )
        return tuple(out)

    def annotation(self, node: Node) -> TypeAnnotation:
        if node.type == "type_annotation" and node.named_children:
            inner = node.named_children[-1]
        else:
            inner = node
        any_count = sum(1 for n in _walk(inner) if n.type == "predefined_type" and self.text(n) == "any")
        return TypeAnnotation(" ".join(self.text(inner).split()), Span.of(inner), any_count)

    def string_value(self, node: Node) -> str:
        parts = []
        for c in node.named_children:
            if c.type in ("string_fragment", "escape_sequence"):
                parts.append(self.text(c))
        if node.type == "template_string" and not parts:
            raw = self.text(node)
            return raw[1:-1]
        return "".join(parts)

    def expr(self, node: Node) -> Expr:
        t = node.type
        span = Span.of(node)
        text = self.text(node)
        if t in ("string", "template_string"):
            inner = Span(node.start_byte + 1, node.end_byte - 1)
            raw = self.source[inner.start:inner.end].decode("utf-8")
            has_subst = any(c.type == "template_substitution" for c in node.named_children)
            return Expr("opaque" if has_subst else "string", text, span, value=raw, value_span=inner)
        if t in ("identifier", "this", "true", "false", "null", "undefined", "number"):
            return Expr("identifier" if t == "identifier" else "opaque", text, span)
        if t == "object":
            entries = []
            for c in node.named_children:
                if c.type == "pair":
                    key = c.child_by_field_name("key")
                    val = c.child_by_field_name("value")
                    if key is None or val is None:
                        continue
                    k = self.string_value(key) if key.type == "string" else self.text(key)
                    entries.append((k, self.expr(val)))
                elif c.type == "shorthand_property_identifier":
                    entries.append((self.text(c), Expr("identifier", self.text(c), Span.of(c))))
            return Expr("object", text, span, entries=tuple(entries))
        if t == "array":
            return Expr("array", text, span, items=tuple(self.expr(c) for c in node.named_children if c.type != "comment"))
        return Expr("opaque", text, span)

    def body(self, node: Node) -> Body:
        if node.type == "statement_block":
            statements = tuple(Statement(c.type, Span.of(c)) for c in node.named_children if c.type != "comment")
        else:
            statements = (Statement("expression", Span.of(node)),)
        calls: list[CallSite] = []
        chains: list[MemberChain] = []
        for n in _walk(node):
            if n.type == "call_expression":
                fn = n.child_by_field_name("function")
                if fn is not None:
                    calls.append(CallSite(self.chain(fn), Span.of(n)))
            if n.type in _CHAIN_TYPES and not self._continues(n):
                chain = self.chain(n)
                if len(chain) > 1:
                    chains.append(MemberChain(chain, Span.of(n)))
        return Body(statements, tuple(calls), tuple(chains))

    @staticmethod
    def _continues(node: Node) -> bool:
        parent = node.parent
        if parent is None:
            return False
        pt = parent.type
        if pt == "member_expression":
            return parent.child_by_field_name("object") == node
        if pt == "call_expression":
            return parent.child_by_field_name("function") == node
        if pt == "subscript_expression":
            return parent.child_by_field_name("object") == node
        return pt == "non_null_expression"

    def chain(self, node: Node) -> tuple[str, ...]:
        t = node.type
        if t in ("identifier", "this", "super", "property_identifier", "private_property_identifier"):
            return (self.text(node),)
        if t == "member_expression":
            obj = node.child_by_field_name("object")
            prop = node.child_by_field_name("property")
            head = self.chain(obj) if obj is not None else ("<expr>",)
            return head + ((self.text(prop),) if prop is not None else ("<expr>",))
        if t == "call_expression":
            fn = node.child_by_field_name("function")
            return (self.chain(fn) if fn is not None else ("<expr>",)) + ("()",)
        if t == "subscript_expression":
            obj = node.child_by_field_name("object")
            return (self.chain(obj) if obj is not None else ("<expr>",)) + ("[]",)
        if t in ("non_null_expression", "parenthesized_expression") and node.named_children:
            return self.chain(node.named_children[0])
        return ("<expr>",)

    # -- any usages ------------------------------------------------------------

    def collect_any(self, root: Node) -> list[AnyUsage]:
        usages = []
        for n in _walk(root):
            if n.type == "arrow_function":
                params = n.child_by_field_name("parameters")
                ret = n.child_by_field_name("return_type")
                self.arrows.append(
                    ArrowFunction(
                        self.parameters(params) if params is not None else (),
                        self.annotation(ret) if ret is not None else None,
                        Span.of(n),
                    )
                )
            if n.type == "predefined_type" and self.text(n) == "any":
                kind, subject = self._classify_any(n)
                usages.append(AnyUsage(kind, subject, Span.of(n)))
        return usages

    def _classify_any(self, node: Node) -> tuple[str, str]:
        nested = False
        cur = node.parent
        while cur is not None:
            t = cur.type
            if t in ("type_arguments",) and cur.parent is not None and cur.parent.type == "type_assertion":
                return "cast", ""
            if t == "as_expression" or t == "satisfies_expression":
                return "cast", self._name_of(cur.named_children[0]) if cur.named_children else ""
            if t == "type_arguments":
                nested = True
            if t == "type_annotation":
                owner = cur.parent
                if owner is None:
                    break
                ot = owner.type
                if ot in ("required_parameter", "optional_parameter"):
                    pattern = owner.child_by_field_name("pattern")
                    name = self.text(pattern) if pattern is not None else ""
                    fn = owner.parent.parent if owner.parent is not None else None
                    callback = fn is not None and fn.type in ("arrow_function", "function_expression")
                    return ("callback-parameter" if callback else "parameter"), name
                if ot in ("public_field_definition", "property_signature"):
                    return "property", self._field_name(owner)
                if ot in ("method_definition", "function_declaration", "arrow_function", "abstract_method_signature",
                          "method_signature", "function_expression", "function_signature"):
                    if owner.child_by_field_name("return_type") == cur:
                        return "return", self._field_name(owner)
                if ot == "variable_declarator":
                    return "variable", self._field_name(owner)
                break
            cur = cur.parent
        return ("type-argument" if nested else "other"), ""

    def _field_name(self, node: Node) -> str:
        name = node.child_by_field_name("name")
        return self.text(name) if name is not None else ""

    def _name_of(self, node: Node) -> str:
        return " ".join(self.text(node).split())[:40]
