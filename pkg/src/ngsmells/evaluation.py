"""Labelled smelly/refactored dataset evaluation: confusion matrices and IR metrics.

Manifest format (JSON list)::

    [{"id": "any-01", "smell": "OverusingAnyType", "variant": "Smelly", "path": "any-01/smelly"}, ...]

``path`` is relative to the dataset directory. Every ``id`` must appear exactly twice,
once per variant, with the same smell.
"""

from __future__ import annotations

import enum
import json
from collections import defaultdict
from dataclasses import dataclass
from pathlib import Path
from typing import Iterable, Optional

from ngsmells.detectors.base import Smell, ThresholdConfig, parse_smell
from ngsmells.errors import ManifestError
from ngsmells.pipeline import analyze_project
from ngsmells.scanner import FrameworkKind


class Variant(str, enum.Enum):
    SMELLY = "Smelly"
    REFACTORED = "Refactored"


@dataclass(frozen=True)
class DatasetInstance:
    id: str
    smell: Smell
    variant: Variant
    path: Path


@dataclass(frozen=True)
class ConfusionMatrix:
    tp: int = 0
    fp: int = 0
    tn: int = 0
    fn: int = 0

    @property
    def total(self) -> int:
        return self.tp + self.fp + self.tn + self.fn

    def add(self, variant: Variant, positive: bool) -> "ConfusionMatrix":
        if variant is Variant.SMELLY:
            return ConfusionMatrix(self.tp + positive, self.fp, self.tn, self.fn + (not positive))
        return ConfusionMatrix(self.tp, self.fp + positive, self.tn + (not positive), self.fn)


@dataclass(frozen=True)
class Metrics:
    accuracy: float
    precision: float
    recall: float
    f1: float


def compute_metrics(cm: ConfusionMatrix) -> Metrics:
    """Accuracy, precision, recall and F1; any zero denominator yields 0."""
    accuracy = (cm.tp + cm.tn) / cm.total if cm.total else 0.0
    precision = cm.tp / (cm.tp + cm.fp) if cm.tp + cm.fp else 0.0
    recall = cm.tp / (cm.tp + cm.fn) if cm.tp + cm.fn else 0.0
    f1 = 2 * precision * recall / (precision + recall) if precision + recall else 0.0
    return Metrics(accuracy, precision, recall, f1)


def load_manifest(path: str | Path, dataset_dir: str | Path | None = None) -> list[DatasetInstance]:
    path = Path(path)
    base = Path(dataset_dir) if dataset_dir is not None else path.parent
    try:
        records = json.loads(path.read_text(encoding="utf-8"))
    except OSError as exc:
        raise ManifestError(f"cannot read manifest {path}: {exc}") from exc
    except json.JSONDecodeError as exc:
        raise ManifestError(f"manifest {path} is not valid JSON: {exc}") from exc
    if not isinstance(records, list):
        raise ManifestError("manifest must be a JSON list of records")

    instances: list[DatasetInstance] = []
    for rec in records:
        if not isinstance(rec, dict) or not {"id", "smell", "variant", "path"} <= rec.keys():
            raise ManifestError("record needs id, smell, variant and path", rec)
        try:
            smell = parse_smell(str(rec["smell"]))
            variant = Variant(rec["variant"])
        except ValueError as exc:
            raise ManifestError(str(exc), rec) from None
        inst_path = base / str(rec["path"])
        if not inst_path.is_dir():
            raise ManifestError(f"instance path does not exist: {inst_path}", rec)
        instances.append(DatasetInstance(str(rec["id"]), smell, variant, inst_path))

    by_id: dict[str, list[DatasetInstance]] = defaultdict(list)
    for inst in instances:
        by_id[inst.id].append(inst)
    for ident, group in by_id.items():
        variants = sorted(i.variant.value for i in group)
        if variants != ["Refactored", "Smelly"]:
            raise ManifestError(f"id {ident!r} must appear once as Smelly and once as Refactored, got {variants}")
        if group[0].smell is not group[1].smell:
            raise ManifestError(f"id {ident!r} pairs different smells")
    return instances


@dataclass(frozen=True)
class Classification:
    instance: DatasetInstance
    positive: bool
    findings: int
    parse_failures: tuple[str, ...] = ()


def classify_instance(instance: DatasetInstance, cfg: Optional[ThresholdConfig] = None) -> Classification:
    """Run only the instance's detector; positive iff it reports at least one finding."""
    analysis = analyze_project(instance.path, cfg, enabled={instance.smell}, framework=FrameworkKind.ANGULAR)
    hits = sum(1 for f in analysis.findings if f.smell is instance.smell)
    return Classification(instance, hits > 0, hits, tuple(analysis.parse_failures))


@dataclass
class Evaluation:
    matrices: dict[Smell, ConfusionMatrix]
    classifications: list[Classification]

    @property
    def diagnostics(self) -> list[str]:
        return [
            f"{c.instance.id} ({c.instance.variant.value}): parse failed for {', '.join(c.parse_failures)}; counted as negative"
            for c in self.classifications
            if c.parse_failures
        ]


def evaluate(instances: Iterable[DatasetInstance], cfg: Optional[ThresholdConfig] = None) -> Evaluation:
    matrices: dict[Smell, ConfusionMatrix] = {}
    results = []
    for inst in sorted(instances, key=lambda i: (i.smell.value, i.id, i.variant.value)):
        result = classify_instance(inst, cfg)
        results.append(result)
        matrices[inst.smell] = matrices.get(inst.smell, ConfusionMatrix()).add(inst.variant, result.positive)
    ordered = {s: matrices[s] for s in Smell if s in matrices}
    return Evaluation(ordered, results)


def metrics_table(matrices: dict[Smell, ConfusionMatrix]) -> dict[str, dict[str, float | int]]:
    out: dict[str, dict[str, float | int]] = {}
    for smell, cm in matrices.items():
        m = compute_metrics(cm)
        out[smell.value] = {
            "tp": cm.tp,
            "fp": cm.fp,
            "tn": cm.tn,
            "fn": cm.fn,
            "accuracy": round(m.accuracy, 3),
            "precision": round(m.precision, 3),
            "recall": round(m.recall, 3),
            "f1": round(m.f1, 3),
        }
    return out


def render_metrics_json(matrices: dict[Smell, ConfusionMatrix]) -> str:
    return json.dumps(metrics_table(matrices), indent=2) + "\n"


def render_metrics_text(matrices: dict[Smell, ConfusionMatrix]) -> str:
    header = f"{'Code smell':<36} {'TP':>4} {'FP':>4} {'TN':>4} {'FN':>4} {'Acc':>6} {'Prec':>6} {'Rec':>6} {'F1':>6}"
    rows = [header, "-" * len(header)]
    for name, row in metrics_table(matrices).items():
        rows.append(
            f"{name:<36} {row['tp']:>4} {row['fp']:>4} {row['tn']:>4} {row['fn']:>4} "
            f"{row['accuracy']:>6.3f} {row['precision']:>6.3f} {row['recall']:>6.3f} {row['f1']:>6.3f}"
        )
    if len(rows) == 2:
        rows.append("(no instances)")
    return "\n".join(rows) + "\n"
