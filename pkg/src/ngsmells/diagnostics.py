from __future__ import annotations

import logging
from dataclasses import dataclass, field

logger = logging.getLogger("ngsmells")


@dataclass(frozen=True, order=True)
class Diagnostic:
    """A non-fatal problem encountered while analyzing a project."""

    path: str
    message: str
    level: str = "warning"

    def __str__(self) -> str:
        where = f"{self.path}: " if self.path else ""
        return f"{self.level}: {where}{self.message}"


@dataclass
class DiagnosticSink:
    items: list[Diagnostic] = field(default_factory=list)

    def warn(self, path: str, message: str) -> None:
        diag = Diagnostic(path, message)
        logger.warning("%s", diag)
        self.items.append(diag)

    def extend(self, other: "DiagnosticSink") -> None:
        self.items.extend(other.items)

    def sorted(self) -> list[Diagnostic]:
        return sorted(set(self.items))
