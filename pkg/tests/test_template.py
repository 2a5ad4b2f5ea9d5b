from __future__ import annotations

from ngsmells.frontend.template import BindingKind, called_names, parse_template, referenced_names


def test_interpolation_call():
    ast = parse_template("<p>Total: {{ calculateTotal() }}</p>")
    assert [i.expression.strip() for i in ast.interpolations] == ["calculateTotal()"]


def test_two_way_binding():
    ast = parse_template('<input [(ngModel)]="name" placeholder="Enter name">\n<p>Hello, {{ name }}!</p>')
    (b,) = ast.bindings
    assert (b.kind, b.target, b.expression) == (BindingKind.TWO_WAY, "ngModel", "name")
    assert len(ast.interpolations) == 1


def test_empty_template():
    ast = parse_template("")
    assert list(ast.elements) == []
    assert not ast.bindings and not ast.interpolations and not ast.warnings


def test_binding_kinds_and_prefixes():
    src = '<a [href]="url" (click)="go($event)" bind-title="t" on-focus="f()" bindon-value="v" [attr.role]="r" class="x"></a>'
    kinds = {(b.kind, b.target) for b in parse_template(src).bindings}
    assert kinds == {
        (BindingKind.PROPERTY, "href"),
        (BindingKind.EVENT, "click"),
        (BindingKind.PROPERTY, "title"),
        (BindingKind.EVENT, "focus"),
        (BindingKind.TWO_WAY, "value"),
        (BindingKind.ATTRIBUTE, "role"),
    }


def test_structural_directives_and_nesting():
    src = """<ul *ngIf="users.length > 0; else emptyList">
    <li *ngFor="let user of users">{{ user.name }}</li>
</ul>
<ng-template #emptyList>
    <p>No users available.</p>
</ng-template>"""
    ast = parse_template(src)
    assert [d.name for d in ast.structural_directives] == ["ngIf", "ngFor"]
    ul = ast.elements[ast.roots[0]]
    assert ul.tag == "ul" and [ast.elements[c].tag for c in ul.children] == ["li"]
    assert ast.warnings == []


def test_control_flow_blocks():
    src = "@if (user) {<p>{{ user.name }}</p>} @else {<p>none</p>}\n@for (x of xs; track x.id) {<i>{{ x }}</i>}"
    ast = parse_template(src)
    assert [(d.name, d.expression) for d in ast.structural_directives] == [("@if", "user"), ("@for", "x of xs; track x.id")]
    assert [e.tag for e in ast.elements] == ["p", "p", "i"]
    assert len(ast.interpolations) == 2


def test_void_elements_and_comments():
    ast = parse_template("<!-- {{ hidden() }} --><img [src]=\"u\"><br><p>{{ a }}</p>")
    assert [e.tag for e in ast.elements] == ["img", "br", "p"]
    assert len(ast.interpolations) == 1


def test_unbalanced_markup_warns_but_parses():
    ast = parse_template("<div><span>{{ a }}</div></p>")
    assert ast.warnings
    assert len(ast.interpolations) == 1


def test_spans_point_at_source():
    src = '<p [title]="t">{{ name }}</p>'
    ast = parse_template(src)
    (b,) = ast.bindings
    assert src[b.span.start : b.span.end] == '[title]="t"'
    assert src[b.expression_span.start : b.expression_span.end] == "t"
    (i,) = ast.interpolations
    # interpolation spans cover the expression, not the braces
    assert src[i.span.start : i.span.end] == "name"


def test_called_names():
    assert [n for n, _ in called_names("calculateTotal()")] == ["calculateTotal"]
    assert [n for n, _ in called_names("items.length")] == []
    assert [n for n, _ in called_names("user.getName()")] == []
    assert [n for n, _ in called_names("value | currency")] == []
    assert [n for n, _ in called_names("this.total() + count(1)")] == ["total", "count"]


def test_referenced_names():
    assert {"user", "flag"} <= referenced_names("user.name && flag")
