from __future__ import annotations

import re

from ngsmells.diagnostics import DiagnosticSink
from ngsmells.model import ProjectModel, trace_input_chains
from ngsmells.pipeline import analyze_sources

from conftest import FIXTURES

LISTING_2 = """@Injectable({ providedIn: 'root' })
export class UserService {
    getName(): string {
        return 'Bob';
    }
}

@Component({
    selector: 'app-user',
    template: '{{ user }}'
})
export class UserComponent {
    name: string;

    constructor(private userService: UserService) {
        this.name = this.userService.getName();
    }
}
"""


def model_of(files: dict[str, str]) -> ProjectModel:
    return analyze_sources(files).model


def fixture_files(name: str) -> dict[str, str]:
    root = FIXTURES / name
    return {str(p.relative_to(root)): p.read_text() for p in sorted(root.rglob("*")) if p.is_file()}


def test_listing2_service_and_component():
    m = model_of({"user.ts": LISTING_2})
    assert [s.class_name for s in m.services] == ["UserService"]
    (c,) = m.components
    assert c.class_name == "UserComponent" and c.injected == ("UserService",)
    assert m.service("UserService").method_usage == {"UserComponent": frozenset({"getName"})}


def test_empty_model():
    m = model_of({})
    assert m.components == () and m.services == () and m.files == () and m.parent_child == ()


def test_listing16_decorated_class_count():
    m = model_of(fixture_files("listing16"))
    (f,) = m.files
    assert f.decorated_class_count == 4


def test_listing15_edges():
    m = model_of(fixture_files("listing15"))
    edges = [(e.parent, e.child) for e in m.parent_child]
    assert edges == [
        ("ChildComponentA", "ChildComponentB"),
        ("ChildComponentB", "ChildComponentC"),
        ("ParentComponent", "ChildComponentA"),
    ]
    first = next(e for e in m.parent_child if e.parent == "ParentComponent")
    assert first.binding_for("data").expression == "info"
    assert first.line == 5


def test_no_known_selectors_no_edges():
    src = "@Component({ selector: 'a-x', template: '<div><mat-icon></mat-icon></div>' })\nexport class X {}\n"
    assert model_of({"x.ts": src}).parent_child == ()


def _brute_force_edges(files: dict[str, str]) -> set[tuple[str, str]]:
    """Independent oracle: regex-scan component sources for selectors and opening tags."""
    comps = []
    for text in files.values():
        for m in re.finditer(r"@Component\(\{(.*?)\}\)\s*export class (\w+)", text, re.S):
            sel = re.search(r"selector:\s*'([^']+)'", m.group(1)).group(1)
            tpl = re.search(r"template:\s*[`']([^`']*)[`']", m.group(1))
            comps.append((m.group(2), sel, tpl.group(1) if tpl else ""))
    return {
        (parent, child)
        for parent, _, tpl in comps
        for child, sel, _ in comps
        if re.search(r"<" + re.escape(sel) + r"[\s>/]", tpl)
    }


def test_two_parents_same_child_match_brute_force():
    files = {
        "a.ts": "@Component({ selector: 'app-a', template: `<app-c [x]=\"1\"></app-c>` })\nexport class A {}\n",
        "b.ts": "@Component({ selector: 'app-b', template: `<p><app-c></app-c></p>` })\nexport class B {}\n",
        "c.ts": "@Component({ selector: 'app-c', template: `<i></i>` })\nexport class C { @Input() x = 0; }\n",
    }
    m = model_of(files)
    got = {(e.parent, e.child) for e in m.parent_child}
    assert got == {("A", "C"), ("B", "C")} == _brute_force_edges(files)


def test_listing9_injection_graph():
    m = model_of(fixture_files("listing09"))
    svc = m.service("AppService")
    assert svc.injected_into == ("HeaderComponent", "ListComponent")
    assert dict(svc.method_usage) == {"HeaderComponent": frozenset({"getUser"}), "ListComponent": frozenset({"getItems"})}


def test_service_never_injected():
    src = "@Injectable()\nexport class Lonely { ping() {} }\n"
    assert model_of({"s.ts": src}).service("Lonely").injected_into == ()


def test_two_methods_of_one_service_recorded():
    files = {
        "s.ts": "@Injectable()\nexport class S { a() {} b() {} c() {} }\n",
        "c.ts": (
            "@Component({ selector: 'x-c', template: '' })\n"
            "export class C {\n"
            "  private s = inject(S);\n"
            "  run() { this.s.a(); this.s.b(); }\n"
            "}\n"
        ),
    }
    usage = model_of(files).service("S").method_usage
    # oracle: every `this.s.<name>(` in the component source
    expected = frozenset(re.findall(r"this\.s\.(\w+)\(", files["c.ts"]))
    assert usage == {"C": expected} and expected == {"a", "b"}


def test_listing15_chain():
    m = model_of(fixture_files("listing15"))
    (chain,) = trace_input_chains(m)
    assert chain.path == ("ParentComponent", "ChildComponentA", "ChildComponentB", "ChildComponentC")
    assert chain.input_name == "data" and chain.depth == 3


def test_direct_binding_depth_one():
    files = {
        "p.ts": "@Component({ selector: 'x-p', template: '<x-c [v]=\"w\"></x-c>' })\nexport class P { w = 1; }\n",
        "c.ts": "@Component({ selector: 'x-c', template: '{{ v }}' })\nexport class C { @Input() v = 0; }\n",
    }
    chains = trace_input_chains(model_of(files))
    assert [c.depth for c in chains] == [1]


def _chain4(middle_template: str) -> dict[str, str]:
    return {
        "p.ts": "@Component({ selector: 'x-p', template: '<x-a [d]=\"info\"></x-a>' })\nexport class P { info = 1; }\n",
        "a.ts": "@Component({ selector: 'x-a', template: '<x-b [d]=\"d\"></x-b>' })\nexport class A { @Input() d = 0; }\n",
        "b.ts": f"@Component({{ selector: 'x-b', template: '{middle_template}' }})\nexport class B {{ @Input() d = 0; }}\n",
        "c.ts": "@Component({ selector: 'x-c', template: '{{ d }}' })\nexport class C { @Input() d = 0; }\n",
    }


def test_chain_split_where_middle_component_uses_input():
    pure = trace_input_chains(model_of(_chain4('<x-c [d]="d"></x-c>')))
    assert [c.path for c in pure] == [("P", "A", "B", "C")]
    # B now interpolates d itself, so it is a consumer and the chain ends there; a new one starts at B
    split = trace_input_chains(model_of(_chain4('<p>{{ d }}</p><x-c [d]="d"></x-c>')))
    assert sorted(c.path for c in split) == [("B", "C"), ("P", "A", "B")]


def cyclic_files(n: int) -> dict[str, str]:
    """Entry component P feeding a ring of ``n - 1`` pure forwarders."""
    ring = [f"r{i}" for i in range(n - 1)]
    files = {"p.ts": "@Component({ selector: 'x-p', template: '<x-r0 [d]=\"info\"></x-r0>' })\nexport class P { info = 1; }\n"}
    for i, name in enumerate(ring):
        nxt = ring[(i + 1) % len(ring)]
        files[f"{name}.ts"] = (
            f"@Component({{ selector: 'x-{name}', template: '<x-{nxt} [d]=\"d\"></x-{nxt}>' }})\n"
            f"export class {name.upper()} {{ @Input() d = 0; }}\n"
        )
    return files


def test_cycle_terminates_with_diagnostic():
    sink = DiagnosticSink()
    chains = trace_input_chains(model_of(cyclic_files(5)), sink)
    assert [c.path for c in chains] == [("P", "R0", "R1", "R2", "R3")]
    assert any("cycle" in d.message for d in sink.sorted())


def test_closed_ring_without_source_yields_no_chain():
    files = cyclic_files(4)
    del files["p.ts"]
    assert trace_input_chains(model_of(files)) == []


def test_duplicate_selector_warns():
    files = {
        "a.ts": "@Component({ selector: 'x-a', template: '' })\nexport class A {}\n",
        "b.ts": "@Component({ selector: 'x-a', template: '' })\nexport class B {}\n",
    }
    diags = analyze_sources(files).diagnostics
    assert any("selector" in d for d in diags)


def test_signal_inputs_and_inject_fields():
    src = """
@Injectable()
export class Api { load() {} }

@Component({ selector: 'x-s', template: '' })
export class S {
  name = input<string>();
  count = input.required<number>();
  picked = model(0);
  changed = output<string>();
  private api = inject(Api);
  go() { this.api.load(); }
}
"""
    m = model_of({"s.ts": src})
    c = m.component("S")
    assert sorted(i.name for i in c.inputs) == ["count", "name", "picked"]
    assert c.injected == ("Api",)
