"""Project traversal, file classification and framework detection."""

from __future__ import annotations

import enum
import json
import os
import posixpath
import re
from dataclasses import dataclass
from functools import lru_cache
from pathlib import Path
from typing import Iterable, Sequence

from ngsmells.diagnostics import DiagnosticSink
from ngsmells.errors import RootNotFound, ScanIoError

DEFAULT_EXCLUDES: tuple[str, ...] = (
    "node_modules/**",
    "dist/**",
    ".git/**",
    "**/*.spec.ts",
    "**/*.test.ts*",
)


class FileKind(str, enum.Enum):
    TYPESCRIPT = "TypeScriptSource"
    TEMPLATE = "TemplateHtml"
    MANIFEST = "Manifest"
    OTHER = "Other"


class FrameworkKind(str, enum.Enum):
    ANGULAR = "Angular"
    REACT_TS = "ReactTypeScript"
    REACT_JS = "ReactJavaScript"
    UNKNOWN = "Unknown"


@dataclass(frozen=True, order=True)
class FileEntry:
    path: str  # posix, relative to the scan root
    kind: FileKind
    size_bytes: int

    @classmethod
    def for_path(cls, path: str, size_bytes: int = 0) -> "FileEntry":
        path = normalize_path(path)
        return cls(path, classify(path), size_bytes)


def normalize_path(path: str) -> str:
    norm = posixpath.normpath(path.replace("\\", "/"))
    if norm.startswith("../") or norm == "..":
        raise ValueError(f"path escapes the project root: {path}")
    return "" if norm == "." else norm


def classify(path: str) -> FileKind:
    name = posixpath.basename(path)
    if name == "package.json":
        return FileKind.MANIFEST
    ext = posixpath.splitext(name)[1].lower()
    if ext in (".ts", ".tsx"):
        return FileKind.TYPESCRIPT
    if ext == ".html":
        return FileKind.TEMPLATE
    return FileKind.OTHER


@lru_cache(maxsize=256)
def _glob_regex(pattern: str) -> re.Pattern[str]:
    out: list[str] = []
    i = 0
    while i < len(pattern):
        if pattern.startswith("**/", i):
            out.append("(?:[^/]*/)*")
            i += 3
        elif pattern.startswith("**", i):
            out.append(".*")
            i += 2
        elif pattern[i] == "*":
            out.append("[^/]*")
            i += 1
        else:
            out.append(re.escape(pattern[i]))
            i += 1
    return re.compile("".join(out) + r"\Z")


def glob_match(pattern: str, path: str) -> bool:
    """Match ``path`` against a glob where ``*`` stays in one segment and ``**`` spans many."""
    return _glob_regex(pattern).match(path) is not None


def is_excluded(path: str, excludes: Iterable[str]) -> bool:
    return any(glob_match(p, path) for p in excludes)


def _prunable(dir_rel: str, excludes: Sequence[str]) -> bool:
    for pattern in excludes:
        if pattern.endswith("/**") and glob_match(pattern[:-3], dir_rel):
            return True
    return False


def scan_project(root: str | os.PathLike[str], excludes: Sequence[str] = DEFAULT_EXCLUDES) -> list[FileEntry]:
    """Return every non-excluded file under ``root``, sorted by relative path."""
    root_path = Path(root)
    if not root_path.is_dir():
        raise RootNotFound(str(root))

    entries: list[FileEntry] = []

    def on_error(err: OSError) -> None:
        raise ScanIoError(str(err.filename), err.strerror or str(err))

    for dirpath, dirnames, filenames in os.walk(root_path, onerror=on_error):
        rel_dir = normalize_path(os.path.relpath(dirpath, root_path))
        kept = []
        for d in dirnames:
            sub = posixpath.join(rel_dir, d) if rel_dir else d
            if not _prunable(sub, excludes):
                kept.append(d)
        dirnames[:] = kept
        for name in filenames:
            rel = posixpath.join(rel_dir, name) if rel_dir else name
            if is_excluded(rel, excludes):
                continue
            full = os.path.join(dirpath, name)
            try:
                st = os.stat(full)
            except OSError as exc:
                raise ScanIoError(rel, exc.strerror or str(exc)) from exc
            if not os.path.isfile(full):
                continue
            entries.append(FileEntry(rel, classify(rel), st.st_size))
    entries.sort(key=lambda e: e.path)
    return entries


def detect_framework(manifest_text: str, diagnostics: DiagnosticSink | None = None, path: str = "package.json") -> FrameworkKind:
    """Classify a project from the text of its ``package.json``."""
    try:
        data = json.loads(manifest_text)
        if not isinstance(data, dict):
            raise ValueError("top-level value is not an object")
        names: set[str] = set()
        for key in ("dependencies", "devDependencies"):
            section = data.get(key)
            if section is None:
                continue
            if not isinstance(section, dict):
                raise ValueError(f"{key} is not an object")
            names.update(section)
    except ValueError as exc:
        if diagnostics is not None:
            diagnostics.warn(path, f"malformed manifest ({exc}); framework unknown")
        return FrameworkKind.UNKNOWN
    return _framework_from_names(names)


def _framework_from_names(names: set[str]) -> FrameworkKind:
    if "@angular/core" in names:
        return FrameworkKind.ANGULAR
    if "react" in names:
        return FrameworkKind.REACT_TS if "typescript" in names else FrameworkKind.REACT_JS
    return FrameworkKind.UNKNOWN


_PRECEDENCE = [FrameworkKind.ANGULAR, FrameworkKind.REACT_TS, FrameworkKind.REACT_JS, FrameworkKind.UNKNOWN]


def detect_project_framework(root: str | os.PathLike[str], entries: Sequence[FileEntry], diagnostics: DiagnosticSink | None = None) -> FrameworkKind:
    """Combine every scanned manifest; the strongest signal wins (Angular first)."""
    found = FrameworkKind.UNKNOWN
    for entry in entries:
        if entry.kind is not FileKind.MANIFEST:
            continue
        try:
            text = (Path(root) / entry.path).read_text(encoding="utf-8")
        except (OSError, UnicodeDecodeError) as exc:
            if diagnostics is not None:
                diagnostics.warn(entry.path, f"cannot read manifest: {exc}")
            continue
        kind = detect_framework(text, diagnostics, entry.path)
        if _PRECEDENCE.index(kind) < _PRECEDENCE.index(found):
            found = kind
    return found
