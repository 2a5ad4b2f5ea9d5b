from __future__ import annotations

import pytest

from ngsmells.diagnostics import DiagnosticSink
from ngsmells.errors import ParseError
from ngsmells.frontend.resolve import TemplateOrigin, resolve_template
from ngsmells.frontend.typescript import ClassDecl, parse_typescript
from ngsmells.scanner import FileEntry

from conftest import FIXTURES

LISTING_1 = """@Component({
    selector: 'app-user',
    template: '<p>Name: {{ name }}</p>'
})
export class UserComponent {
    name: string = 'Bob';
}
"""


def parse(source: str, path: str = "src/a.ts"):
    return parse_typescript(FileEntry.for_path(path), source)


def test_listing1_component_decorator():
    tree = parse(LISTING_1)
    (cls,) = tree.classes
    assert isinstance(cls, ClassDecl)
    assert cls.name == "UserComponent" and cls.exported
    deco = cls.decorator("Component")
    assert deco is not None and deco.simple_name == "Component"
    assert deco.options["selector"].value == "app-user"
    (prop,) = cls.members
    assert prop.kind == "property" and prop.name == "name" and prop.type.text == "string"


def test_empty_source_has_no_roots():
    tree = parse("")
    assert list(tree.roots) == []
    assert tree.any_usages == []


def test_listing11_any_annotations():
    tree = parse((FIXTURES / "listing11" / "app-user-profile.component.ts").read_text())
    (cls,) = tree.classes
    by_name = {m.name: m for m in cls.members}
    assert by_name["user"].type.is_any
    assert by_name["users"].type.is_any_array
    assert not by_name["users"].type.is_any


def test_parse_error_reports_position():
    with pytest.raises(ParseError) as info:
        parse("export class {\n  x: = ;\n")
    assert info.value.line >= 1 and info.value.column >= 1
    assert info.value.path == "src/a.ts"


def test_class_span_round_trips_source_text():
    src = "import { Component } from '@angular/core';\n\n" + LISTING_1
    tree = parse(src)
    (cls,) = tree.classes
    text = tree.text(cls.span)
    assert text.startswith("export class UserComponent") or text.startswith("class UserComponent")
    assert text.rstrip().endswith("}")
    for member in cls.members:
        assert tree.text(member.span).startswith(member.name)


def test_decorators_on_members_and_methods():
    src = """
import { Component, HostListener, Input, Output, EventEmitter, ViewChild } from '@angular/core';
@Component({ selector: 'x-a', template: '' })
export class A {
  @Input('alias') value!: string;
  @Output() changed = new EventEmitter<string>();
  @ViewChild('box', { read: ElementRef }) box!: ElementRef;
  @HostListener('window:resize')
  onResize() {}
}
"""
    (cls,) = parse(src).classes
    members = {m.name: m for m in cls.members}
    assert members["value"].decorator("Input").args[0].value == "alias"
    assert members["changed"].decorator("Output") is not None
    view_child = members["box"].decorator("ViewChild")
    assert view_child.args[0].value == "box"
    assert view_child.options["read"].text == "ElementRef"
    assert members["onResize"].decorator("HostListener") is not None


def test_constructor_parameters_and_imports():
    src = """
import { Injectable } from '@angular/core';
import { Api } from './api';
export class S {
  constructor(private readonly api: Api, public name: string) {}
}
"""
    tree = parse(src)
    assert [(i.module, tuple(sorted(i.names))) for i in tree.imports] == [
        ("@angular/core", ("Injectable",)),
        ("./api", ("Api",)),
    ]
    ctor = tree.classes[0].constructor
    assert [(p.name, p.type.text) for p in ctor.params] == [("api", "Api"), ("name", "string")]


def test_loc_counts_lines():
    assert parse("a;\nb;\nc;\n").loc == 3
    assert parse("a;\nb;").loc == 2


def test_any_kinds_classified():
    src = """
export class K {
  p: any;
  m(a: any): any { return (a as any); }
  run() { [1].forEach((x: any) => x); }
}
export const v: Map<string, any> = new Map();
"""
    kinds = sorted(u.kind for u in parse(src).any_usages)
    assert kinds == sorted(["property", "parameter", "return", "cast", "callback-parameter", "variable"])


def test_any_not_counted_in_comments_strings_identifiers():
    src = "// any\nconst anyValue = 'any';\nconst t = `any ${anyValue}`;\n/* any */\n"
    assert parse(src).any_usages == []


def _meta(src):
    tree = parse(src, "src/app/x.component.ts")
    return tree, tree.classes[0].decorator("Component").options


def test_resolve_inline_template():
    tree, meta = _meta(LISTING_1)
    res = resolve_template(meta, tree.file, lambda p: "", tree)
    assert res.origin is TemplateOrigin.INLINE
    assert res.source == "<p>Name: {{ name }}</p>"
    assert res.first_line == 3


def test_resolve_external_template_next_to_component():
    tree, meta = _meta("@Component({ selector: 'a', templateUrl: './dashboard.component.html' })\nexport class A {}\n")
    files = {"src/app/dashboard.component.html": "<p>hi</p>"}
    res = resolve_template(meta, tree.file, files.__getitem__, tree)
    assert res.origin is TemplateOrigin.EXTERNAL
    assert res.source == "<p>hi</p>" and res.path == "src/app/dashboard.component.html"


def test_resolve_missing_external_template_warns():
    tree, meta = _meta("@Component({ selector: 'a', templateUrl: './gone.html' })\nexport class A {}\n")

    def reader(path):
        raise FileNotFoundError(path)

    sink = DiagnosticSink()
    res = resolve_template(meta, tree.file, reader, tree, sink)
    assert res.source == "" and res.origin is TemplateOrigin.NONE
    assert "gone.html" in sink.sorted()[0].message


def test_resolve_neither_key_warns():
    tree, meta = _meta("@Component({ selector: 'a' })\nexport class A {}\n")
    sink = DiagnosticSink()
    res = resolve_template(meta, tree.file, lambda p: "", tree, sink)
    assert res.source == "" and len(sink.sorted()) == 1


def test_resolve_both_keys_prefers_inline():
    tree, meta = _meta("@Component({ selector: 'a', template: '<b></b>', templateUrl: './a.html' })\nexport class A {}\n")
    sink = DiagnosticSink()
    res = resolve_template(meta, tree.file, lambda p: "<i></i>", tree, sink)
    assert res.source == "<b></b>" and len(sink.sorted()) == 1
