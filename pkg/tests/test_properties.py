from __future__ import annotations

import dataclasses

from hypothesis import HealthCheck, given, settings
from hypothesis import strategies as st

from ngsmells.detectors import Smell, ThresholdConfig
from ngsmells.detectors.duplication import similarity
from ngsmells.detectors.runner import run_detectors
from ngsmells.diagnostics import DiagnosticSink
from ngsmells.model import trace_input_chains
from ngsmells.pipeline import analyze_project, analyze_sources
from ngsmells.reporting import Report, render_json

from conftest import FIXTURES
from test_model import cyclic_files

SETTINGS = settings(max_examples=100, deadline=None, suppress_health_check=[HealthCheck.too_slow])


@st.composite
def projects(draw):
    """Random Angular projects: components with varying size, input counts and forwarding chains."""
    n = draw(st.integers(2, 7))
    files: dict[str, str] = {}
    for i in range(n):
        inputs = draw(st.integers(0, 9))
        padding = draw(st.integers(0, 60)) * draw(st.sampled_from([1, 5]))
        forwards_to = draw(st.one_of(st.none(), st.integers(0, n - 1)))
        members = ["  @Input() d = 0;"] + [f"  @Input() in{k} = {k};" for k in range(inputs)]
        members += [f"  p{k} = {k};" for k in range(padding)]
        if forwards_to is not None and forwards_to != i:
            tpl = f'<x-c{forwards_to} [d]="d"></x-c{forwards_to}>'
        else:
            tpl = "{{ d }}"
        extra = "".join(
            f"\n@Injectable()\nexport class S{i}x{k} {{}}\n" for k in range(draw(st.integers(0, 2)))
        )
        files[f"c{i}.ts"] = (
            f"@Component({{ selector: 'x-c{i}', template: `{tpl}` }})\n"
            f"export class C{i} {{\n" + "\n".join(members) + "\n}\n" + extra
        )
    root = draw(st.integers(0, n - 1))
    files["root.ts"] = f"@Component({{ selector: 'x-root', template: `<x-c{root} [d]=\"v\"></x-c{root}>` }})\nexport class Root {{ v = 1; }}\n"
    return files


THRESHOLDS = {
    Smell.LARGE_COMPONENT: "large_component_loc",
    Smell.LARGE_FILE: "large_file_loc",
    Smell.TOO_MANY_INPUTS: "too_many_inputs",
    Smell.PROP_DRILLING: "prop_drilling_min_depth",
}


@SETTINGS
@given(projects(), st.sampled_from(sorted(THRESHOLDS, key=lambda s: s.value)), st.integers(1, 300), st.integers(0, 300))
def test_threshold_monotonicity(files, smell, low, delta):
    model = analyze_sources(files).model
    name = THRESHOLDS[smell]
    base = ThresholdConfig(large_file_loc_only=True)
    lo = dataclasses.replace(base, **{name: low})
    hi = dataclasses.replace(base, **{name: low + delta})
    n_lo = len(run_detectors(model, lo, {smell}))
    n_hi = len(run_detectors(model, hi, {smell}))
    assert n_hi <= n_lo


@settings(max_examples=30, deadline=None)
@given(projects())
def test_determinism_byte_identical(files):
    a = render_json(Report.from_analysis(analyze_sources(files, enabled=set(Smell))))
    b = render_json(Report.from_analysis(analyze_sources(files, enabled=set(Smell))))
    assert a == b


def test_determinism_on_fixtures():
    for name in ("listing15", "listing09", "listing08", "clean"):
        runs = {render_json(Report.from_analysis(analyze_project(FIXTURES / name, enabled=set(Smell)))) for _ in range(2)}
        assert len(runs) == 1


tokens = st.lists(st.sampled_from(["ID0", "ID1", "ID2", "(", ")", "{", "}", ";", "STR", "NUM", "class", "this", "."]), max_size=40)


@settings(max_examples=200)
@given(tokens, tokens)
def test_similarity_symmetric_and_bounded(a, b):
    s = similarity(a, b)
    assert s == similarity(b, a)
    assert 0.0 <= s <= 1.0


@settings(max_examples=200)
@given(tokens.filter(bool))
def test_self_similarity_is_one(a):
    assert similarity(a, a) == 1.0


@settings(max_examples=50, deadline=None)
@given(projects(), st.randoms(use_true_random=False))
def test_model_order_insensitive(files, rnd):
    items = list(files.items())
    rnd.shuffle(items)
    a = analyze_sources(files, enabled=set(Smell))
    b = analyze_sources(dict(items), enabled=set(Smell))
    assert a.model == b.model
    assert a.findings == b.findings


def test_cyclic_five_components_terminate():
    files = cyclic_files(5)
    model = analyze_sources(files).model
    assert len(model.components) == 5
    sink = DiagnosticSink()
    chains = trace_input_chains(model, sink)
    assert all(c.depth <= 5 for c in chains)
    assert sink.sorted()
