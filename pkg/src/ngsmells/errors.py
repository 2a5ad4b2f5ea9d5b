"""Exception hierarchy shared across the analyzer."""

from __future__ import annotations


class NgSmellsError(Exception):
    """Base class for all analyzer errors."""


class RootNotFound(NgSmellsError):
    def __init__(self, root: str) -> None:
        super().__init__(f"project root not found or not a directory: {root}")
        self.root = root


class ScanIoError(NgSmellsError):
    def __init__(self, path: str, reason: str) -> None:
        super().__init__(f"cannot read {path}: {reason}")
        self.path = path


class ParseError(NgSmellsError):
    """A TypeScript file that could not be parsed; the file is dropped from analysis."""

    def __init__(self, path: str, line: int, column: int, message: str) -> None:
        super().__init__(f"{path}:{line}:{column}: {message}")
        self.path = path
        self.line = line
        self.column = column
        self.message = message


class TemplateNotFound(NgSmellsError):
    def __init__(self, path: str) -> None:
        super().__init__(f"template file not found: {path}")
        self.path = path


class ConfigError(NgSmellsError):
    pass


class ManifestError(NgSmellsError):
    """Invalid evaluation manifest; ``record`` names the offending entry when known."""

    def __init__(self, message: str, record: object = None) -> None:
        super().__init__(message if record is None else f"{message}: {record!r}")
        self.record = record
