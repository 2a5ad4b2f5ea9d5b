from __future__ import annotations

import dataclasses
import enum
import json
from dataclasses import dataclass, field
from pathlib import Path
from typing import Any, Mapping

from ngsmells.errors import ConfigError


class Smell(str, enum.Enum):
    # catalog order follows how often each smell was reported, most first
    LARGE_COMPONENT = "LargeComponent"
    INEFFICIENT_METHOD_BINDING = "InefficientMethodBinding"
    OVERUSING_ANY_TYPE = "OverusingAnyType"
    EXCESSIVE_PARENT_TO_CHILD_COMMUNICATION = "ExcessiveParentToChildCommunication"
    DIRECT_DOM_MANIPULATION = "DirectDomManipulation"
    COUPLED_SERVICES = "CoupledServices"
    INHERITANCE_INSTEAD_OF_COMPOSITION = "InheritanceInsteadOfComposition"
    TOO_MANY_INPUTS = "TooManyInputs"
    PROP_DRILLING = "PropDrilling"
    LARGE_FILE = "LargeFile"
    DUPLICATED_COMPONENT = "DuplicatedComponent"


class Maturity(str, enum.Enum):
    EVALUATED = "Evaluated"
    EXPERIMENTAL = "Experimental"


EVALUATED_SMELLS = frozenset(
    {
        Smell.OVERUSING_ANY_TYPE,
        Smell.LARGE_COMPONENT,
        Smell.LARGE_FILE,
        Smell.INHERITANCE_INSTEAD_OF_COMPOSITION,
        Smell.TOO_MANY_INPUTS,
    }
)

DISPLAY_NAMES: dict[Smell, str] = {
    Smell.LARGE_COMPONENT: "Large Component",
    Smell.INEFFICIENT_METHOD_BINDING: "Inefficient method binding in templates",
    Smell.OVERUSING_ANY_TYPE: "Overusing Any Type",
    Smell.EXCESSIVE_PARENT_TO_CHILD_COMMUNICATION: "Excessive Parent-to-Child Communication",
    Smell.DIRECT_DOM_MANIPULATION: "Direct DOM Manipulation",
    Smell.COUPLED_SERVICES: "Coupled Services",
    Smell.INHERITANCE_INSTEAD_OF_COMPOSITION: "Inheritance Instead of Composition",
    Smell.TOO_MANY_INPUTS: "Too Many Inputs",
    Smell.PROP_DRILLING: "Prop Drilling",
    Smell.LARGE_FILE: "Large File",
    Smell.DUPLICATED_COMPONENT: "Duplicated Component",
}


def maturity_of(smell: Smell) -> Maturity:
    return Maturity.EVALUATED if smell in EVALUATED_SMELLS else Maturity.EXPERIMENTAL


def parse_smell(name: str) -> Smell:
    """Accept the id (``LargeFile``), its display name, or any case/dash/underscore variant."""
    key = "".join(ch for ch in name.lower() if ch.isalnum())
    for smell in Smell:
        if key in (smell.value.lower(), "".join(ch for ch in DISPLAY_NAMES[smell].lower() if ch.isalnum())):
            return smell
    raise ValueError(f"unknown smell: {name}")


@dataclass(frozen=True)
class Finding:
    smell: Smell
    file: str
    start_line: int
    end_line: int
    subject: str
    message: str
    metadata: Mapping[str, Any] = field(default_factory=dict)

    @property
    def maturity(self) -> Maturity:
        return maturity_of(self.smell)

    def sort_key(self) -> tuple:
        return (self.file, self.start_line, self.smell.value, self.end_line, self.subject, self.message)


@dataclass(frozen=True)
class ThresholdConfig:
    large_component_loc: int = 200
    large_file_loc: int = 400
    large_file_min_decorated_classes: int = 3
    too_many_inputs: int = 6
    prop_drilling_min_depth: int = 3
    view_child_min_calls: int = 3
    coupled_service_min_components: int = 2
    coupled_service_max_usage_overlap: float = 0.0
    duplicate_similarity: float = 0.85
    any_min_count: int = 1
    large_file_loc_only: bool = False
    exempt_onpush: bool = False

    def __post_init__(self) -> None:
        for f in dataclasses.fields(self):
            value = getattr(self, f.name)
            if f.type == "bool":
                if not isinstance(value, bool):
                    raise ConfigError(f"{f.name} must be a boolean, got {value!r}")
            elif f.type == "float":
                if isinstance(value, bool) or not isinstance(value, (int, float)) or not 0.0 <= value <= 1.0:
                    raise ConfigError(f"{f.name} must be a fraction in [0, 1], got {value!r}")
            elif isinstance(value, bool) or not isinstance(value, int) or value < 1:
                raise ConfigError(f"{f.name} must be an integer >= 1, got {value!r}")

    @classmethod
    def from_mapping(cls, data: Mapping[str, Any]) -> "ThresholdConfig":
        known = {f.name for f in dataclasses.fields(cls)}
        unknown = sorted(set(data) - known)
        if unknown:
            raise ConfigError(f"unknown configuration keys: {', '.join(unknown)}")
        return cls(**data)

    @classmethod
    def load(cls, path: str | Path) -> "ThresholdConfig":
        try:
            data = json.loads(Path(path).read_text(encoding="utf-8"))
        except OSError as exc:
            raise ConfigError(f"cannot read config {path}: {exc}") from exc
        except json.JSONDecodeError as exc:
            raise ConfigError(f"config {path} is not valid JSON: {exc}") from exc
        if not isinstance(data, dict):
            raise ConfigError(f"config {path} must contain a JSON object")
        return cls.from_mapping(data)
