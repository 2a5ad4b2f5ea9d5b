from __future__ import annotations

import json

import pytest

from ngsmells.detectors import Smell
from ngsmells.errors import ManifestError
from ngsmells.evaluation import (
    ConfusionMatrix,
    DatasetInstance,
    Variant,
    classify_instance,
    compute_metrics,
    evaluate,
    load_manifest,
    metrics_table,
    render_metrics_json,
)

from conftest import DATASET, FIXTURES


def _write_pair(root, ident="p1", smell="OverusingAnyType", smelly="export let a: any;\n", refactored="export let a: number;\n"):
    for variant, text in (("smelly", smelly), ("refactored", refactored)):
        d = root / ident / variant
        d.mkdir(parents=True)
        (d / "a.ts").write_text(text)
    return [
        {"id": ident, "smell": smell, "variant": "Smelly", "path": f"{ident}/smelly"},
        {"id": ident, "smell": smell, "variant": "Refactored", "path": f"{ident}/refactored"},
    ]


def test_load_one_pair(tmp_path):
    records = _write_pair(tmp_path)
    (tmp_path / "m.json").write_text(json.dumps(records))
    instances = load_manifest(tmp_path / "m.json", tmp_path)
    assert [(i.id, i.variant) for i in instances] == [("p1", Variant.SMELLY), ("p1", Variant.REFACTORED)]


def test_unpaired_id_rejected(tmp_path):
    records = _write_pair(tmp_path)[:1]
    (tmp_path / "m.json").write_text(json.dumps(records))
    with pytest.raises(ManifestError, match="p1"):
        load_manifest(tmp_path / "m.json", tmp_path)


def test_missing_path_rejected(tmp_path):
    records = _write_pair(tmp_path)
    records[1]["path"] = "nowhere"
    (tmp_path / "m.json").write_text(json.dumps(records))
    with pytest.raises(ManifestError, match="nowhere"):
        load_manifest(tmp_path / "m.json", tmp_path)


@pytest.mark.parametrize("payload", ["{}", "not json", json.dumps([{"id": "x"}])])
def test_malformed_manifest(tmp_path, payload):
    (tmp_path / "m.json").write_text(payload)
    with pytest.raises(ManifestError):
        load_manifest(tmp_path / "m.json", tmp_path)


def test_full_scale_manifest_shape(tmp_path):
    records = []
    for smell in ("OverusingAnyType", "LargeComponent", "LargeFile", "InheritanceInsteadOfComposition", "TooManyInputs"):
        for i in range(30):
            records += _write_pair(tmp_path, f"{smell}-{i}", smell)
    (tmp_path / "m.json").write_text(json.dumps(records))
    instances = load_manifest(tmp_path / "m.json", tmp_path)
    assert len(instances) == 300
    assert sum(i.variant is Variant.SMELLY for i in instances) == 150


def test_classify_listing11_pair(tmp_path):
    smelly = DatasetInstance("l11", Smell.OVERUSING_ANY_TYPE, Variant.SMELLY, FIXTURES / "listing11")
    assert classify_instance(smelly).positive
    typed = tmp_path / "typed"
    typed.mkdir()
    (typed / "a.ts").write_text("export class A { user: { name: string } | null = null; }\n")
    assert not classify_instance(DatasetInstance("l11", Smell.OVERUSING_ANY_TYPE, Variant.REFACTORED, typed)).positive


def test_parse_failure_counts_negative_with_diagnostic(tmp_path):
    bad = tmp_path / "bad"
    bad.mkdir()
    (bad / "a.ts").write_text("export let a: any = ;;; class {{{\n")
    inst = DatasetInstance("b", Smell.OVERUSING_ANY_TYPE, Variant.SMELLY, bad)
    result = evaluate([inst])
    assert result.matrices[Smell.OVERUSING_ANY_TYPE] == ConfusionMatrix(0, 0, 0, 1)
    assert result.diagnostics and "a.ts" in result.diagnostics[0]


def test_evaluate_empty():
    assert evaluate([]).matrices == {}


def test_evaluate_tallies(tmp_path):
    records = _write_pair(tmp_path, "ok") + _write_pair(tmp_path, "fp", refactored="export let b: any;\n")
    (tmp_path / "m.json").write_text(json.dumps(records))
    result = evaluate(load_manifest(tmp_path / "m.json", tmp_path))
    assert result.matrices == {Smell.OVERUSING_ANY_TYPE: ConfusionMatrix(tp=2, fp=1, tn=1, fn=0)}


@pytest.mark.parametrize(
    "cm,expected",
    [
        ((30, 0, 30, 0), (1.0, 1.0, 1.0, 1.0)),
        ((30, 7, 23, 0), (0.883, 0.811, 1.0, 0.896)),
        ((30, 3, 27, 0), (0.95, 0.909, 1.0, 0.952)),
        ((0, 0, 30, 0), (1.0, 0.0, 0.0, 0.0)),
        ((0, 0, 0, 0), (0.0, 0.0, 0.0, 0.0)),
    ],
)
def test_compute_metrics(cm, expected):
    m = compute_metrics(ConfusionMatrix(*cm))
    assert tuple(round(v, 3) for v in (m.accuracy, m.precision, m.recall, m.f1)) == expected


def test_metrics_json_shape():
    d = json.loads(render_metrics_json({Smell.LARGE_FILE: ConfusionMatrix(30, 3, 27, 0)}))
    assert d == {"LargeFile": {"tp": 30, "fp": 3, "tn": 27, "fn": 0, "accuracy": 0.95, "precision": 0.909, "recall": 1.0, "f1": 0.952}}


def test_metrics_table_order_follows_catalog():
    table = metrics_table({Smell.LARGE_COMPONENT: ConfusionMatrix(1, 0, 1, 0), Smell.LARGE_FILE: ConfusionMatrix(1, 0, 1, 0)})
    assert list(table) == ["LargeComponent", "LargeFile"]


def test_seeded_dataset_shape():
    instances = load_manifest(DATASET / "manifest.json", DATASET)
    per_smell = {}
    for i in instances:
        per_smell.setdefault(i.smell, set()).add(i.id)
    assert len(per_smell) == 5 and all(len(ids) >= 10 for ids in per_smell.values())
