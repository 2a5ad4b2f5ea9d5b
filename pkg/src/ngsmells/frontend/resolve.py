from __future__ import annotations

import enum
import posixpath
from dataclasses import dataclass
from typing import Callable, Mapping

from ngsmells.diagnostics import DiagnosticSink
from ngsmells.errors import TemplateNotFound
from ngsmells.frontend.typescript import Expr, SyntaxTree
from ngsmells.scanner import FileEntry, normalize_path

FsReader = Callable[[str], str]


class TemplateOrigin(str, enum.Enum):
    INLINE = "Inline"
    EXTERNAL = "ExternalFile"
    NONE = "None"


@dataclass(frozen=True)
class ResolvedTemplate:
    source: str
    origin: TemplateOrigin
    path: str  # file the template text lives in
    first_line: int  # 1-based line of the template's first character in ``path``

    def file_line(self, template_line: int) -> int:
        """Convert a 0-based template line into a 1-based line of ``path``."""
        return self.first_line + template_line


def resolve_template(
    component_meta: Mapping[str, Expr],
    file: FileEntry,
    fs_reader: FsReader,
    tree: SyntaxTree | None = None,
    diagnostics: DiagnosticSink | None = None,
) -> ResolvedTemplate:
    """Locate a component's template: inline ``template`` wins over ``templateUrl``.

    ``fs_reader`` takes a root-relative posix path and returns its text, raising
    ``FileNotFoundError`` (or ``OSError``) when the file is absent. A missing
    external template yields an empty template plus a warning.
    """
    sink = diagnostics if diagnostics is not None else DiagnosticSink()
    inline = component_meta.get("template")
    url = component_meta.get("templateUrl")
    if inline is not None:
        if url is not None:
            sink.warn(file.path, "component declares both template and templateUrl; using the inline template")
        if inline.value is None:
            sink.warn(file.path, "inline template is not a literal string; analyzed as empty")
            return ResolvedTemplate("", TemplateOrigin.INLINE, file.path, 1)
        first_line = 1
        if tree is not None and inline.value_span is not None:
            first_line = tree.line_index.line(inline.value_span.start)
        return ResolvedTemplate(inline.value, TemplateOrigin.INLINE, file.path, first_line)
    if url is not None and url.kind == "string" and url.value:
        try:
            target = normalize_path(posixpath.join(posixpath.dirname(file.path), url.value))
            return ResolvedTemplate(fs_reader(target), TemplateOrigin.EXTERNAL, target, 1)
        except (OSError, ValueError, UnicodeDecodeError):
            err = TemplateNotFound(url.value)
            sink.warn(file.path, f"{err}; component analyzed with an empty template")
            return ResolvedTemplate("", TemplateOrigin.NONE, file.path, 1)
    sink.warn(file.path, "component has neither template nor templateUrl; analyzed with an empty template")
    return ResolvedTemplate("", TemplateOrigin.NONE, file.path, 1)
