"""Command-line entry point: ``analyze``, ``evaluate`` and ``list-smells``."""

from __future__ import annotations

import argparse
import logging
import os
import sys
from pathlib import Path
from typing import Optional, Sequence

from ngsmells import __version__
from ngsmells.detectors.base import DISPLAY_NAMES, EVALUATED_SMELLS, Smell, ThresholdConfig, maturity_of, parse_smell
from ngsmells.errors import NgSmellsError
from ngsmells.evaluation import evaluate, load_manifest, render_metrics_json, render_metrics_text
from ngsmells.pipeline import analyze_project
from ngsmells.reporting import Report, exit_code, render_json, render_text
from ngsmells.scanner import DEFAULT_EXCLUDES, FrameworkKind

CONFIG_ENV = "NG_SMELL_CONFIG"
EXIT_FATAL = 2

FRAMEWORK_CHOICES = {
    "auto": None,
    "angular": FrameworkKind.ANGULAR,
    "react-ts": FrameworkKind.REACT_TS,
    "react-js": FrameworkKind.REACT_JS,
}


def build_parser() -> argparse.ArgumentParser:
    parser = argparse.ArgumentParser(prog="ng-smells", description="Detect Angular code smells in a project.")
    parser.add_argument("--version", action="version", version=f"%(prog)s {__version__}")
    parser.add_argument("-v", "--verbose", action="store_true", help="log diagnostics to stderr as they occur")
    sub = parser.add_subparsers(dest="command", required=True)

    an = sub.add_parser("analyze", help="analyze a project directory")
    an.add_argument("path", help="project root")
    an.add_argument("--format", choices=("text", "json"), default="text")
    an.add_argument("--config", help=f"threshold config JSON (falls back to ${CONFIG_ENV})")
    an.add_argument("--smells", help="comma-separated smell ids to run (implies those detectors are enabled)")
    an.add_argument("--experimental", action="store_true", help="also run detectors that have not been evaluated")
    an.add_argument("--framework", choices=tuple(FRAMEWORK_CHOICES), default="auto")
    an.add_argument("--exclude", action="append", default=[], metavar="GLOB", help="extra exclude pattern (repeatable)")
    an.add_argument("--out", help="write the report here instead of stdout")

    ev = sub.add_parser("evaluate", help="score detectors against a labelled dataset")
    ev.add_argument("--dataset", required=True, help="dataset root directory")
    ev.add_argument("--manifest", required=True, help="JSON manifest of smelly/refactored instances")
    ev.add_argument("--config", help=f"threshold config JSON (falls back to ${CONFIG_ENV})")
    ev.add_argument("--format", choices=("text", "json"), default="text")
    ev.add_argument("--out", help="write the metrics here instead of stdout")

    sub.add_parser("list-smells", help="print the smell catalog with maturity")
    return parser


def _load_config(path: Optional[str]) -> ThresholdConfig:
    path = path or os.environ.get(CONFIG_ENV) or None
    return ThresholdConfig.load(path) if path else ThresholdConfig()


def _enabled_smells(smells: Optional[str], experimental: bool) -> frozenset[Smell]:
    if smells:
        return frozenset(parse_smell(s.strip()) for s in smells.split(",") if s.strip())
    return frozenset(Smell) if experimental else EVALUATED_SMELLS


def _emit(text: str, out: Optional[str]) -> None:
    if out:
        Path(out).write_text(text, encoding="utf-8")
    else:
        sys.stdout.write(text)


def _cmd_analyze(args: argparse.Namespace) -> int:
    cfg = _load_config(args.config)
    enabled = _enabled_smells(args.smells, args.experimental)
    analysis = analyze_project(
        args.path,
        cfg,
        enabled=enabled,
        framework=FRAMEWORK_CHOICES[args.framework],
        excludes=tuple(DEFAULT_EXCLUDES) + tuple(args.exclude),
    )
    report = Report.from_analysis(analysis)
    _emit(render_json(report) if args.format == "json" else render_text(report), args.out)
    return exit_code(report)


def _cmd_evaluate(args: argparse.Namespace) -> int:
    cfg = _load_config(args.config)
    instances = load_manifest(args.manifest, args.dataset)
    result = evaluate(instances, cfg)
    for line in result.diagnostics:
        print(f"warning: {line}", file=sys.stderr)
    text = render_metrics_json(result.matrices) if args.format == "json" else render_metrics_text(result.matrices)
    _emit(text, args.out)
    return 0


def _cmd_list_smells(_: argparse.Namespace) -> int:
    for smell in Smell:
        print(f"{smell.value:<40} {maturity_of(smell).value:<13} {DISPLAY_NAMES[smell]}")
    return 0


def main(argv: Optional[Sequence[str]] = None) -> int:
    parser = build_parser()
    try:
        args = parser.parse_args(argv)
    except SystemExit as exc:
        return int(exc.code) if isinstance(exc.code, int) else EXIT_FATAL
    logging.basicConfig(level=logging.WARNING if args.verbose else logging.ERROR, format="%(levelname)s: %(message)s")
    handlers = {"analyze": _cmd_analyze, "evaluate": _cmd_evaluate, "list-smells": _cmd_list_smells}
    try:
        return handlers[args.command](args)
    except (NgSmellsError, ValueError, OSError) as exc:
        print(f"ng-smells: error: {exc}", file=sys.stderr)
        return EXIT_FATAL


if __name__ == "__main__":
    sys.exit(main())
