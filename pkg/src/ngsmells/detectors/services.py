from __future__ import annotations

from itertools import combinations

from ngsmells.detectors.base import Finding, Smell, ThresholdConfig
from ngsmells.model import ServiceInfo


def jaccard(a: frozenset[str], b: frozenset[str]) -> float:
    union = a | b
    return len(a & b) / len(union) if union else 0.0


def detect_coupled_services(service: ServiceInfo, cfg: ThresholdConfig) -> list[Finding]:
    """A service whose consumers use disjoint slices of it serves unrelated concerns.

    Components that inject the service but call none of its methods carry no evidence
    either way and are left out of the comparison.
    """
    usage = {name: methods for name, methods in service.method_usage.items() if methods}
    if len(usage) < cfg.coupled_service_min_components:
        return []
    overlap = max(jaccard(usage[a], usage[b]) for a, b in combinations(sorted(usage), 2))
    if overlap > cfg.coupled_service_max_usage_overlap:
        return []
    start, end = service.lines
    return [
        Finding(
            Smell.COUPLED_SERVICES,
            service.file,
            start,
            end,
            service.class_name,
            f"service is injected into {len(usage)} components that use unrelated parts of it",
            {
                "components": sorted(usage),
                "max_overlap": round(overlap, 3),
                "usage": {k: sorted(v) for k, v in sorted(usage.items())},
            },
        )
    ]
