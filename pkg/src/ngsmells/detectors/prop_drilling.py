from __future__ import annotations

from typing import Iterable

from ngsmells.detectors.base import Finding, Smell, ThresholdConfig
from ngsmells.model import InputChain, ProjectModel


def detect_prop_drilling(chains: Iterable[InputChain], cfg: ThresholdConfig, model: ProjectModel) -> list[Finding]:
    """One finding per maximal forwarding chain at least ``prop_drilling_min_depth`` deep."""
    findings = []
    for chain in chains:
        if chain.depth < cfg.prop_drilling_min_depth:
            continue
        first = chain.edges[0]
        line = first.line
        parent = model.component(first.parent)
        binding = first.binding_for(chain.input_name)
        if parent is not None and binding is not None:
            line = parent.template_ref.file_line(parent.template.line_of(binding.span.start))
        intermediaries = len(chain.path) - 2
        findings.append(
            Finding(
                Smell.PROP_DRILLING,
                first.file,
                line,
                line,
                chain.input_name,
                f"input '{chain.input_name}' is passed through {intermediaries} intermediary components: "
                + " -> ".join(chain.path),
                {"depth": chain.depth, "path": list(chain.path)},
            )
        )
    return findings
