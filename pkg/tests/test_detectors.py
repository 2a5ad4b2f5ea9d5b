from __future__ import annotations

import pytest

from ngsmells.detectors import Smell, ThresholdConfig
from ngsmells.detectors.base import EVALUATED_SMELLS, Maturity, parse_smell
from ngsmells.detectors.duplication import component_tokens, normalized_tokens, similarity
from ngsmells.detectors.services import jaccard
from ngsmells.errors import ConfigError
from ngsmells.pipeline import analyze_project, analyze_sources
from ngsmells.scanner import FrameworkKind

from conftest import FIXTURES


def golden(name: str, smell: Smell, cfg: ThresholdConfig | None = None):
    return analyze_project(FIXTURES / name, cfg, enabled={smell}).findings


def sources(files, smell, cfg=None):
    return analyze_sources(files, cfg, enabled={smell}).findings


def comp(name="X", selector="x-a", template="", body="", decorators=""):
    return f"@Component({{ selector: '{selector}', template: `{template}` }})\nexport class {name} {{\n{body}\n}}\n"


# --- Overusing Any Type -----------------------------------------------------------


def test_any_listing11():
    found = golden("listing11", Smell.OVERUSING_ANY_TYPE)
    assert [(f.subject, f.start_line, f.metadata["kind"]) for f in found] == [
        ("user", 9, "property"),
        ("users", 10, "property"),
        ("id", 14, "parameter"),
        ("data", 15, "callback-parameter"),
    ]


def test_any_listing11_typed_refactor():
    text = (FIXTURES / "listing11" / "app-user-profile.component.ts").read_text()
    typed = text.replace("user: any;", "user: User | null = null;").replace("any[]", "User[]")
    typed = typed.replace("id: any", "id: number").replace("data: any", "data: User")
    assert sources({"a.ts": typed}, Smell.OVERUSING_ANY_TYPE) == []


def test_any_identifier_and_comment_ignored():
    assert sources({"a.ts": "// any\nexport const anyValue = 1;\n"}, Smell.OVERUSING_ANY_TYPE) == []


def test_any_min_count():
    src = "export let a: any;\nexport let b: any;\n"
    assert len(sources({"a.ts": src}, Smell.OVERUSING_ANY_TYPE, ThresholdConfig(any_min_count=2))) == 2
    assert sources({"a.ts": src}, Smell.OVERUSING_ANY_TYPE, ThresholdConfig(any_min_count=3)) == []


# --- Large Component --------------------------------------------------------------


def _long_component(class_lines: int) -> str:
    body = "\n".join(f"  f{i} = {i};" for i in range(class_lines - 2))
    return "import { Component } from '@angular/core';\n@Component({ selector: 'x-big', template: '' })\nexport class Big {\n" + body + "\n}\n"


def test_large_component_250_lines():
    src = _long_component(250)
    # newline-count oracle: lines from the class keyword line to the closing brace
    lines = src.splitlines()
    start = next(i for i, l in enumerate(lines) if l.startswith("export class"))
    end = max(i for i, l in enumerate(lines) if l == "}")
    assert end - start + 1 == 250
    (f,) = sources({"big.ts": src}, Smell.LARGE_COMPONENT)
    assert f.metadata == {"loc": 250, "threshold": 200}
    assert (f.start_line, f.end_line) == (start + 1, end + 1)


def test_large_component_boundary():
    assert sources({"a.ts": _long_component(200)}, Smell.LARGE_COMPONENT) == []
    assert len(sources({"a.ts": _long_component(201)}, Smell.LARGE_COMPONENT)) == 1


def test_large_component_listing12_not_flagged():
    assert golden("listing12", Smell.LARGE_COMPONENT) == []


def test_large_component_listing18_false_positive_reproduced():
    (f,) = golden("listing18", Smell.LARGE_COMPONENT)
    assert f.subject == "DashboardComponent" and f.metadata["loc"] > 200


# --- Large File -------------------------------------------------------------------


def test_large_file_listing16_class_count():
    (f,) = golden("listing16", Smell.LARGE_FILE)
    assert f.metadata["decorated_classes"] == 4 and "class" in f.message


def test_large_file_listing16_loc_only_mode():
    assert golden("listing16", Smell.LARGE_FILE, ThresholdConfig(large_file_loc_only=True)) == []


def _file_of(total_lines: int) -> str:
    head = ["@Component({ selector: 'x-a', template: '' })", "export class A {}"]
    pad = [f"export const c{i} = {i};" for i in range(total_lines - len(head))]
    return "\n".join(head + pad) + "\n"


def test_large_file_loc_clause():
    src = _file_of(401)
    assert src.count("\n") == 401
    (f,) = sources({"a.ts": src}, Smell.LARGE_FILE)
    assert f.metadata["loc"] == 401
    assert sources({"a.ts": _file_of(400)}, Smell.LARGE_FILE) == []
    assert sources({"a.ts": _file_of(50)}, Smell.LARGE_FILE) == []


# --- Inheritance ------------------------------------------------------------------


def test_inheritance_listing14():
    (f,) = golden("listing14", Smell.INHERITANCE_INSTEAD_OF_COMPOSITION)
    assert (f.file, f.start_line, f.end_line, f.subject) == ("home.component.ts", 12, 14, "HomeComponent")
    assert f.message == "component class extends user-defined BasePageComponent"


def test_inheritance_none_without_extends():
    assert sources({"a.ts": comp()}, Smell.INHERITANCE_INSTEAD_OF_COMPOSITION) == []


def test_inheritance_external_base_exempt():
    src = "import { LibBase } from '@acme/ui';\n" + comp().replace("export class X", "export class X extends LibBase")
    assert sources({"a.ts": src}, Smell.INHERITANCE_INSTEAD_OF_COMPOSITION) == []


def test_inheritance_external_import_shadows_local_name():
    # a same-named class elsewhere in the project does not matter when this file imports it from a package
    files = {
        "a.ts": "import { Base } from '@acme/ui';\n" + comp().replace("export class X", "export class X extends Base"),
        "other/base.ts": "export class Base {}\n",
    }
    assert sources(files, Smell.INHERITANCE_INSTEAD_OF_COMPOSITION) == []


def test_inheritance_relative_import_flagged():
    files = {
        "a.ts": "import { Base } from './base';\n" + comp().replace("export class X", "export class X extends Base"),
        "base.ts": "export abstract class Base {}\n",
    }
    assert len(sources(files, Smell.INHERITANCE_INSTEAD_OF_COMPOSITION)) == 1


# --- Too Many Inputs --------------------------------------------------------------


def _inputs(n: int) -> str:
    return comp(body="\n".join(f"  @Input() in{i} = {i};" for i in range(n)))


def test_too_many_inputs_user_card():
    (f,) = golden("user_card", Smell.TOO_MANY_INPUTS)
    assert (f.metadata["count"], f.metadata["threshold"]) == (7, 6)
    assert len(f.metadata["inputs"]) == 7


@pytest.mark.parametrize("n,expected", [(5, 0), (6, 1), (7, 1)])
def test_too_many_inputs_boundary(n, expected):
    assert len(sources({"a.ts": _inputs(n)}, Smell.TOO_MANY_INPUTS)) == expected


# --- Inefficient method binding ---------------------------------------------------


def test_inefficient_listing07():
    (f,) = golden("listing07", Smell.INEFFICIENT_METHOD_BINDING)
    assert f.file == "app-cart.component.html" and f.start_line == 3
    assert f.metadata["method"] == "calculateTotal"


@pytest.mark.parametrize(
    "template,expected",
    [
        ("{{ calculateTotal() }}", 1),
        ('<button (click)="calculateTotal()"></button>', 0),
        ("{{ items.length }}", 0),
        ('<p [title]="calculateTotal()"></p>', 1),
        ("{{ items | json }}", 0),
        ("{{ unknownFn() }}", 0),
    ],
)
def test_inefficient_examples(template, expected):
    src = comp(template=template, body="  items = [];\n  calculateTotal() { return 1; }")
    assert len(sources({"a.ts": src}, Smell.INEFFICIENT_METHOD_BINDING)) == expected


def test_inefficient_onpush_exemption_is_opt_in():
    src = (
        "@Component({ selector: 'x', template: '{{ f() }}', changeDetection: ChangeDetectionStrategy.OnPush })\n"
        "export class X { f() { return 1; } }\n"
    )
    assert len(sources({"a.ts": src}, Smell.INEFFICIENT_METHOD_BINDING)) == 1
    assert sources({"a.ts": src}, Smell.INEFFICIENT_METHOD_BINDING, ThresholdConfig(exempt_onpush=True)) == []


# --- Direct DOM manipulation ------------------------------------------------------


def test_dom_listing13():
    (f,) = golden("listing13", Smell.DIRECT_DOM_MANIPULATION)
    assert (f.start_line, f.subject) == (11, "AlertComponent.ngAfterViewInit")


def test_dom_view_child_component_method_not_dom():
    assert golden("listing08", Smell.DIRECT_DOM_MANIPULATION) == []


def test_dom_injected_never_dereferenced():
    src = comp(body="  constructor(private el: ElementRef) {}\n  ping() { return this.el; }")
    assert sources({"a.ts": src}, Smell.DIRECT_DOM_MANIPULATION) == []


def test_dom_constructor_injection_dereferenced():
    src = comp(body="  constructor(private el: ElementRef) {}\n  focus() { this.el.nativeElement.focus(); }")
    (f,) = sources({"a.ts": src}, Smell.DIRECT_DOM_MANIPULATION)
    assert f.subject == "X.focus"


def test_dom_inject_function_form():
    src = comp(body="  private host = inject(ElementRef);\n  paint() { this.host.nativeElement.style.color = 'red'; }")
    assert len(sources({"a.ts": src}, Smell.DIRECT_DOM_MANIPULATION)) == 1


# --- Excessive parent-to-child communication --------------------------------------


def test_parent_child_listing08():
    (f,) = golden("listing08", Smell.EXCESSIVE_PARENT_TO_CHILD_COMMUNICATION)
    # site oracle: count `this.child.<m>(` occurrences in the fixture
    text = (FIXTURES / "listing08" / "parent.component.ts").read_text()
    assert f.metadata["call_sites"] == text.count("this.child.") == 7
    assert f.subject == "ParentComponent"


def _vc(calls: int) -> str:
    body = "  @ViewChild(ChildComponent) child!: ChildComponent;\n" + "\n".join(f"  m{i}() {{ this.child.go{i}(); }}" for i in range(calls))
    return comp(body=body)


@pytest.mark.parametrize("calls,expected", [(1, 0), (2, 0), (3, 1)])
def test_parent_child_boundary(calls, expected):
    assert len(sources({"a.ts": _vc(calls)}, Smell.EXCESSIVE_PARENT_TO_CHILD_COMMUNICATION)) == expected


# --- Coupled services -------------------------------------------------------------


def test_coupled_listing09():
    (f,) = golden("listing09", Smell.COUPLED_SERVICES)
    assert f.subject == "AppService"
    assert f.metadata["max_overlap"] == 0.0


def _svc_files(usages: list[str]) -> dict[str, str]:
    files = {"s.ts": "@Injectable()\nexport class S { getUser() {} getItems() {} }\n"}
    for i, call in enumerate(usages):
        files[f"c{i}.ts"] = comp(name=f"C{i}", selector=f"x-c{i}", body=f"  v = this.s.{call}();\n  constructor(private s: S) {{}}")
    return files


def test_coupled_shared_concern_not_flagged():
    assert sources(_svc_files(["getUser", "getUser"]), Smell.COUPLED_SERVICES) == []


def test_coupled_single_injection_not_flagged():
    assert sources(_svc_files(["getUser"]), Smell.COUPLED_SERVICES) == []


def test_jaccard():
    assert jaccard(frozenset({"a"}), frozenset({"b"})) == 0.0
    assert jaccard(frozenset({"a", "b"}), frozenset({"b", "c"})) == pytest.approx(1 / 3)


# --- Prop drilling ----------------------------------------------------------------


def test_prop_drilling_listing15():
    (f,) = golden("listing15", Smell.PROP_DRILLING)
    assert (f.subject, f.start_line) == ("data", 5)
    assert f.metadata["depth"] == 3


def _drill(depth: int) -> dict[str, str]:
    names = [f"n{i}" for i in range(depth + 1)]
    files = {}
    for i, n in enumerate(names):
        if i == 0:
            body, tpl = "  info = 1;", f'<x-{names[1]} [d]="info"></x-{names[1]}>'
        elif i < depth:
            body, tpl = "  @Input() d = 0;", f'<x-{names[i + 1]} [d]="d"></x-{names[i + 1]}>'
        else:
            body, tpl = "  @Input() d = 0;", "{{ d }}"
        files[f"{n}.ts"] = comp(name=n.upper(), selector=f"x-{n}", template=tpl, body=body)
    return files


@pytest.mark.parametrize("depth,expected", [(2, 0), (3, 1), (4, 1), (5, 1)])
def test_prop_drilling_depths(depth, expected):
    found = sources(_drill(depth), Smell.PROP_DRILLING)
    assert len(found) == expected
    if found:
        assert found[0].metadata["depth"] == depth


# --- Duplicated component ---------------------------------------------------------


def test_duplicated_listing17():
    (f,) = golden("listing17", Smell.DUPLICATED_COMPONENT)
    assert f.subject == "AdminCardComponent" and f.metadata["other"] == "UserCardComponent"
    assert f.metadata["similarity"] == 1.0


def test_listing17_similarity_oracle():
    # renaming admin->user turns one component into the other textually, so normalized streams must agree
    text = (FIXTURES / "listing17" / "cards.ts").read_text()
    user_part, admin_part = text.split("@Component")[1:]
    assert admin_part.replace("admin", "user").replace("Admin", "User").strip() == user_part.strip()
    a = analyze_project(FIXTURES / "listing17").model
    ta, tb = (component_tokens(c) for c in a.components)
    assert ta == tb and similarity(ta, tb) == 1.0


def test_unrelated_components_not_duplicates():
    files = {
        "a.ts": comp(name="A", selector="x-a", template="<ul><li *ngFor=\"let i of items\">{{ i }}</li></ul>", body="  items: string[] = [];\n  add(x: string) { this.items.push(x); }"),
        "b.ts": comp(name="B", selector="x-b", template="<form (submit)=\"save()\"><input [(ngModel)]=\"name\"></form>", body="  name = '';\n  constructor(private http: HttpClient) {}\n  save() { return this.http.post('/api', { name: this.name }); }"),
    }
    assert sources(files, Smell.DUPLICATED_COMPONENT) == []


def test_normalized_tokens_rename_identifiers():
    assert normalized_tokens("foo(bar, 'x', 3)") == normalized_tokens("baz(qux, 'y', 4)")
    assert normalized_tokens("if (a) return a;") != normalized_tokens("if (a) return b;")


# --- Catalog and config -----------------------------------------------------------


def test_catalog_closure_and_maturity():
    assert len(Smell) == 11
    assert {s for s in Smell if s in EVALUATED_SMELLS} == {
        Smell.OVERUSING_ANY_TYPE,
        Smell.LARGE_COMPONENT,
        Smell.LARGE_FILE,
        Smell.INHERITANCE_INSTEAD_OF_COMPOSITION,
        Smell.TOO_MANY_INPUTS,
    }
    found = analyze_project(FIXTURES / "listing15").findings
    assert all(f.smell in set(Smell) for f in found)
    assert all((f.maturity is Maturity.EVALUATED) == (f.smell in EVALUATED_SMELLS) for f in found)


def test_parse_smell_variants():
    assert parse_smell("large-file") is Smell.LARGE_FILE
    assert parse_smell("Inefficient method binding in templates") is Smell.INEFFICIENT_METHOD_BINDING
    with pytest.raises(ValueError):
        parse_smell("GodClass")


@pytest.mark.parametrize(
    "kwargs",
    [{"large_component_loc": 0}, {"duplicate_similarity": 1.5}, {"too_many_inputs": True}, {"large_file_loc_only": 1}],
)
def test_config_validation(kwargs):
    with pytest.raises(ConfigError):
        ThresholdConfig(**kwargs)


def test_config_load(tmp_path):
    p = tmp_path / "cfg.json"
    p.write_text('{"too_many_inputs": 8}')
    assert ThresholdConfig.load(p).too_many_inputs == 8
    p.write_text('{"bogus": 1}')
    with pytest.raises(ConfigError):
        ThresholdConfig.load(p)


# --- Dispatch ---------------------------------------------------------------------


def test_unknown_framework_any_free_no_findings():
    assert analyze_sources({"a.ts": _inputs(9)}, framework=FrameworkKind.UNKNOWN).findings == []


def test_enabled_filter():
    found = analyze_project(FIXTURES / "listing15", enabled={Smell.LARGE_FILE}).findings
    assert {f.smell for f in found} == {Smell.LARGE_FILE}


def test_findings_sorted():
    found = analyze_project(FIXTURES / "listing15").findings
    keys = [(f.file, f.start_line, f.smell.value) for f in found]
    assert keys == sorted(keys)


def test_union_of_listing_findings():
    """Running every detector over all listings together equals the per-listing goldens combined."""
    import shutil
    import tempfile
    from pathlib import Path

    names = ["listing07", "listing08", "listing11", "listing13", "listing14", "listing16", "listing17", "user_card"]
    per_listing = []
    for n in names:
        for f in analyze_project(FIXTURES / n).findings:
            per_listing.append((f"{n}/{f.file}", f.start_line, f.smell, f.subject))
    with tempfile.TemporaryDirectory() as tmp:
        for n in names:
            shutil.copytree(FIXTURES / n, Path(tmp) / n)
        combined = [(f.file, f.start_line, f.smell, f.subject) for f in analyze_project(tmp).findings]
    assert sorted(combined, key=str) == sorted(per_listing, key=str)
