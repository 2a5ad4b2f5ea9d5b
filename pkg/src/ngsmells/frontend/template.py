"""Lenient Angular template parsing.

Templates are scanned rather than validated: a malformed fragment is skipped with a
diagnostic and scanning resumes. Spans here are *character* offsets into the
template source (which may itself be a slice of a TypeScript file).
"""

from __future__ import annotations

import enum
import re
from dataclasses import dataclass, field
from typing import Iterator, Optional

from ngsmells.frontend.typescript import Span

VOID_ELEMENTS = frozenset(
    "area base br col embed hr img input link meta param source track wbr".split()
)
_RAW_TEXT = frozenset(("script", "style"))

_TAG_NAME = re.compile(r"[A-Za-z][\w:.-]*")
_ATTR_NAME = re.compile(r"[^\s\"'>/=]+")
_CLOSE_TAG = re.compile(r"</\s*([A-Za-z][\w:.-]*)\s*>")
_BLOCK = re.compile(r"@(else\s+if|if|for|switch|case|defer)\s*\(")


class BindingKind(str, enum.Enum):
    PROPERTY = "Property"
    EVENT = "Event"
    TWO_WAY = "TwoWay"
    ATTRIBUTE = "Attribute"


@dataclass(frozen=True)
class Binding:
    kind: BindingKind
    target: str
    expression: str
    span: Span  # the whole attribute
    expression_span: Span
    element: int  # index into TemplateAst.elements


@dataclass(frozen=True)
class Interpolation:
    expression: str  # verbatim text between the braces, trimmed
    span: Span  # of the trimmed expression


@dataclass(frozen=True)
class StructuralDirective:
    name: str  # "ngIf", "ngFor", ... or "@if", "@for" for control-flow blocks
    expression: str
    span: Span
    element: Optional[int] = None


@dataclass(frozen=True)
class Attribute:
    name: str
    value: Optional[str]
    span: Span


@dataclass
class Element:
    tag: str
    span: Span  # the opening tag
    attributes: list[Attribute] = field(default_factory=list)
    children: list[int] = field(default_factory=list)
    parent: Optional[int] = None


@dataclass
class TemplateAst:
    source: str = ""
    elements: list[Element] = field(default_factory=list)
    bindings: list[Binding] = field(default_factory=list)
    interpolations: list[Interpolation] = field(default_factory=list)
    structural_directives: list[StructuralDirective] = field(default_factory=list)
    warnings: list[str] = field(default_factory=list)

    @property
    def roots(self) -> list[int]:
        return [i for i, e in enumerate(self.elements) if e.parent is None]

    def bindings_of(self, element: int) -> list[Binding]:
        return [b for b in self.bindings if b.element == element]

    def expressions(self) -> Iterator[tuple[str, Span]]:
        """Every bound expression in source order: interpolations, bindings, directives."""
        items: list[tuple[str, Span]] = [(i.expression, i.span) for i in self.interpolations]
        items += [(b.expression, b.expression_span) for b in self.bindings]
        items += [(d.expression, d.span) for d in self.structural_directives]
        items.sort(key=lambda it: it[1])
        return iter(items)

    def line_of(self, offset: int) -> int:
        """0-based line number of ``offset`` within the template."""
        return self.source.count("\n", 0, offset)


def _classify(name: str) -> tuple[Optional[BindingKind], str]:
    if name.startswith("[(") and name.endswith(")]"):
        return BindingKind.TWO_WAY, name[2:-2]
    if name.startswith("[") and name.endswith("]"):
        target = name[1:-1]
        if target.startswith("attr."):
            return BindingKind.ATTRIBUTE, target[5:]
        return BindingKind.PROPERTY, target
    if name.startswith("(") and name.endswith(")"):
        return BindingKind.EVENT, name[1:-1]
    for prefix, kind in (("bindon-", BindingKind.TWO_WAY), ("bind-", BindingKind.PROPERTY), ("on-", BindingKind.EVENT)):
        if name.startswith(prefix) and len(name) > len(prefix):
            return kind, name[len(prefix):]
    return None, name


class _Scanner:
    def __init__(self, source: str) -> None:
        self.src = source
        self.ast = TemplateAst(source=source)
        self.stack: list[int] = []

    def warn(self, pos: int, message: str) -> None:
        self.ast.warnings.append(f"template line {self.src.count(chr(10), 0, pos) + 1}: {message}")

    def run(self) -> TemplateAst:
        src = self.src
        pos = 0
        n = len(src)
        while pos < n:
            if src.startswith("<!--", pos):
                end = src.find("-->", pos + 4)
                if end == -1:
                    self.warn(pos, "unterminated comment")
                    break
                pos = end + 3
            elif src.startswith("</", pos):
                pos = self.close_tag(pos)
            elif src.startswith("<", pos) and pos + 1 < n and src[pos + 1].isalpha():
                pos = self.open_tag(pos)
            else:
                pos = self.text(pos)
        for idx in self.stack:
            if self.ast.elements[idx].tag.lower() not in VOID_ELEMENTS:
                self.warn(self.ast.elements[idx].span.start, f"unclosed <{self.ast.elements[idx].tag}>")
        return self.ast

    def text(self, pos: int) -> int:
        src = self.src
        n = len(src)
        while pos < n:
            if src.startswith("{{", pos):
                end = src.find("}}", pos + 2)
                if end == -1:
                    self.warn(pos, "unterminated interpolation")
                    return n
                self.interpolation(pos + 2, end)
                pos = end + 2
                continue
            if src[pos] == "@":
                m = _BLOCK.match(src, pos)
                if m:
                    close = _matching_paren(src, m.end() - 1)
                    if close == -1:
                        self.warn(pos, "unbalanced control-flow block")
                        pos = m.end()
                        continue
                    name = "@" + " ".join(m.group(1).split())
                    expr_start, expr_end = _trim(src, m.end(), close)
                    self.ast.structural_directives.append(
                        StructuralDirective(name, src[expr_start:expr_end], Span(expr_start, expr_end))
                    )
                    pos = close + 1
                    continue
            if src[pos] == "<" and (src.startswith("</", pos) or src.startswith("<!--", pos)
                                    or (pos + 1 < n and src[pos + 1].isalpha())):
                return pos
            pos += 1
        return pos

    def interpolation(self, start: int, end: int) -> None:
        s, e = _trim(self.src, start, end)
        self.ast.interpolations.append(Interpolation(self.src[s:e], Span(s, e)))

    def close_tag(self, pos: int) -> int:
        m = _CLOSE_TAG.match(self.src, pos)
        if not m:
            self.warn(pos, "malformed closing tag skipped")
            end = self.src.find(">", pos)
            return len(self.src) if end == -1 else end + 1
        tag = m.group(1)
        for depth in range(len(self.stack) - 1, -1, -1):
            if self.ast.elements[self.stack[depth]].tag == tag:
                for idx in self.stack[depth + 1:]:
                    if self.ast.elements[idx].tag.lower() not in VOID_ELEMENTS:
                        self.warn(self.ast.elements[idx].span.start, f"unclosed <{self.ast.elements[idx].tag}>")
                del self.stack[depth:]
                break
        else:
            self.warn(pos, f"stray </{tag}> ignored")
        return m.end()

    def open_tag(self, pos: int) -> int:
        src = self.src
        n = len(src)
        m = _TAG_NAME.match(src, pos + 1)
        assert m is not None
        tag = m.group(0)
        idx = len(self.ast.elements)
        element = Element(tag, Span(pos, pos))
        if self.stack:
            element.parent = self.stack[-1]
            self.ast.elements[self.stack[-1]].children.append(idx)
        self.ast.elements.append(element)
        p = m.end()
        self_closing = False
        while True:
            while p < n and src[p].isspace():
                p += 1
            if p >= n:
                self.warn(pos, f"unterminated <{tag}> tag")
                element.span = Span(pos, n)
                return n
            if src[p] == ">":
                p += 1
                break
            if src.startswith("/>", p):
                p += 2
                self_closing = True
                break
            am = _ATTR_NAME.match(src, p)
            if not am:
                self.warn(p, f"unexpected character {src[p]!r} in <{tag}>")
                p += 1
                continue
            name = am.group(0)
            a_start = p
            p = am.end()
            q = p
            while q < n and src[q].isspace():
                q += 1
            value: Optional[str] = None
            v_start = v_end = p
            if q < n and src[q] == "=":
                q += 1
                while q < n and src[q].isspace():
                    q += 1
                if q < n and src[q] in "\"'":
                    close = src.find(src[q], q + 1)
                    if close == -1:
                        self.warn(q, f"unterminated attribute value for {name}")
                        end = src.find(">", q)
                        element.span = Span(pos, n if end == -1 else end + 1)
                        return n if end == -1 else end + 1
                    v_start, v_end = q + 1, close
                    p = close + 1
                else:
                    um = re.compile(r"[^\s>]+").match(src, q)
                    v_start = q
                    v_end = um.end() if um else q
                    p = v_end
                value = src[v_start:v_end]
            self.attribute(idx, name, value, Span(a_start, p), v_start, v_end)
        element.span = Span(pos, p)
        lower = tag.lower()
        if lower in _RAW_TEXT and not self_closing:
            close = re.compile(rf"</\s*{re.escape(tag)}\s*>", re.I).search(src, p)
            return n if close is None else close.end()
        if not self_closing and lower not in VOID_ELEMENTS:
            self.stack.append(idx)
        return p

    def attribute(self, element: int, name: str, value: Optional[str], span: Span, v_start: int, v_end: int) -> None:
        self.ast.elements[element].attributes.append(Attribute(name, value, span))
        if name.startswith("*"):
            s, e = _trim(self.src, v_start, v_end)
            self.ast.structural_directives.append(StructuralDirective(name[1:], self.src[s:e], Span(s, e), element))
            return
        kind, target = _classify(name)
        if kind is not None:
            s, e = _trim(self.src, v_start, v_end)
            self.ast.bindings.append(Binding(kind, target, self.src[s:e], span, Span(s, e), element))
        elif value:
            start = v_start
            while True:
                open_ = self.src.find("{{", start, v_end)
                if open_ == -1:
                    break
                close = self.src.find("}}", open_ + 2, v_end)
                if close == -1:
                    self.warn(open_, "unterminated interpolation in attribute")
                    break
                self.interpolation(open_ + 2, close)
                start = close + 2


def _trim(src: str, start: int, end: int) -> tuple[int, int]:
    while start < end and src[start].isspace():
        start += 1
    while end > start and src[end - 1].isspace():
        end -= 1
    return start, end


def _matching_paren(src: str, open_pos: int) -> int:
    depth = 0
    quote = ""
    for i in range(open_pos, len(src)):
        ch = src[i]
        if quote:
            if ch == quote:
                quote = ""
            continue
        if ch in "\"'`":
            quote = ch
        elif ch == "(":
            depth += 1
        elif ch == ")":
            depth -= 1
            if depth == 0:
                return i
    return -1


def parse_template(source: str) -> TemplateAst:
    """Extract elements, bindings, interpolations and structural directives from ``source``."""
    return _Scanner(source).run()


# -- expression helpers ---------------------------------------------------------

_EXPR_TOKEN = re.compile(
    r"""(?P<str>'(?:\\.|[^'\\])*'|"(?:\\.|[^"\\])*"|`(?:\\.|[^`\\])*`)"""
    r"|(?P<num>\d+(?:\.\d+)?)"
    r"|(?P<id>[A-Za-z_$][\w$]*)"
    r"|(?P<op>\?\.|\|\||&&|\?\?|[^\s\w$])"
)
_TEMPLATE_KEYWORDS = frozenset(
    "let of as index count first last even odd true false null undefined this typeof track trackBy".split()
)


def _tokens(expr: str) -> list[tuple[str, str, int]]:
    return [(m.lastgroup or "", m.group(0), m.start()) for m in _EXPR_TOKEN.finditer(expr)]


def called_names(expr: str) -> list[tuple[str, int]]:
    """Names of bare (component-scope) function calls in a template expression.

    ``total()`` and ``this.total()`` count; ``user.name()`` and pipe names do not.
    """
    toks = _tokens(expr)
    out = []
    for i, (kind, text, pos) in enumerate(toks):
        if kind != "id" or i + 1 >= len(toks) or toks[i + 1][1] != "(":
            continue
        prev = toks[i - 1][1] if i > 0 else ""
        if prev in (".", "?."):
            if i >= 2 and toks[i - 2][1] == "this" and (i < 3 or toks[i - 3][1] not in (".", "?.")):
                out.append((text, pos))
            continue
        if prev == "|":
            continue
        out.append((text, pos))
    return out


def referenced_names(expr: str) -> set[str]:
    """Component-scope identifiers a template expression reads (member names after ``.`` excluded)."""
    toks = _tokens(expr)
    out: set[str] = set()
    for i, (kind, text, _pos) in enumerate(toks):
        if kind != "id" or text in _TEMPLATE_KEYWORDS:
            continue
        prev = toks[i - 1][1] if i > 0 else ""
        if prev in (".", "?."):
            if i >= 2 and toks[i - 2][1] == "this":
                out.add(text)
            continue
        if prev == "|":
            continue
        out.add(text)
    return out
