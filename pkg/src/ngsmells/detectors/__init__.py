"""One pure function per catalog smell, plus the framework-aware runner."""

from ngsmells.detectors.any_type import detect_overusing_any
from ngsmells.detectors.base import (
    DISPLAY_NAMES,
    EVALUATED_SMELLS,
    Finding,
    Maturity,
    Smell,
    ThresholdConfig,
    maturity_of,
    parse_smell,
)
from ngsmells.detectors.dom import detect_direct_dom, detect_parent_child_communication
from ngsmells.detectors.duplication import detect_duplicated_component, similarity
from ngsmells.detectors.inheritance import detect_inheritance
from ngsmells.detectors.prop_drilling import detect_prop_drilling
from ngsmells.detectors.runner import run_detectors, smells_for
from ngsmells.detectors.services import detect_coupled_services
from ngsmells.detectors.size import detect_large_component, detect_large_file, detect_too_many_inputs
from ngsmells.detectors.templates import detect_inefficient_method_binding

__all__ = [
    "DISPLAY_NAMES",
    "EVALUATED_SMELLS",
    "Finding",
    "Maturity",
    "Smell",
    "ThresholdConfig",
    "detect_coupled_services",
    "detect_direct_dom",
    "detect_duplicated_component",
    "detect_inefficient_method_binding",
    "detect_inheritance",
    "detect_large_component",
    "detect_large_file",
    "detect_overusing_any",
    "detect_parent_child_communication",
    "detect_prop_drilling",
    "detect_too_many_inputs",
    "maturity_of",
    "parse_smell",
    "run_detectors",
    "similarity",
    "smells_for",
]
