"""Near-duplicate components by alpha-renamed token shingles.

Each component is reduced to the token stream of its class declaration followed by
its template. Literals collapse to ``STR``/``NUM``, keywords stay, and every other
identifier is renamed to a positional placeholder by first occurrence, so two
components that differ only in naming normalize to the same stream. Similarity is
the Dice coefficient over multisets of token trigrams, which is symmetric and 1.0
for identical streams.
"""

from __future__ import annotations

import re
from collections import Counter
from itertools import combinations
from typing import Iterable, Sequence

from ngsmells.detectors.base import Finding, Smell, ThresholdConfig
from ngsmells.model import ComponentInfo

SHINGLE = 3
MIN_TOKENS = 12  # trivial components (empty class + one-line template) are all alike

_TOKEN = re.compile(
    r"""(?P<comment>//[^\n]*|/\*.*?\*/|<!--.*?-->)"""
    r"""|(?P<str>'(?:\\.|[^'\\])*'|"(?:\\.|[^"\\])*"|`(?:\\.|[^`\\])*`)"""
    r"|(?P<num>\d+(?:\.\d+)?)"
    r"|(?P<id>[A-Za-z_$][\w$]*)"
    r"|(?P<op>=>|===|!==|==|!=|<=|>=|&&|\|\||\?\?|\?\.|\{\{|\}\}|\S)",
    re.S,
)

KEYWORDS = frozenset(
    """abstract any as async await boolean break case catch class const constructor continue
    debugger default delete do else enum export extends false finally for from function get
    if implements import in instanceof interface let new null number of private protected
    public readonly return set static string super switch this throw true try type typeof
    undefined var void while yield""".split()
)


def normalized_tokens(text: str) -> list[str]:
    names: dict[str, str] = {}
    out = []
    for m in _TOKEN.finditer(text):
        kind = m.lastgroup
        tok = m.group(0)
        if kind == "comment":
            continue
        if kind == "str":
            out.append("STR")
        elif kind == "num":
            out.append("NUM")
        elif kind == "id" and tok not in KEYWORDS:
            out.append(names.setdefault(tok, f"${len(names)}"))
        else:
            out.append(tok)
    return out


def component_tokens(component: ComponentInfo) -> list[str]:
    return normalized_tokens(component.tree.text(component.span) + "\n" + component.template.source)


def _shingles(tokens: Sequence[str], k: int) -> Counter:
    if len(tokens) < k:
        k = 1
    return Counter(tuple(tokens[i:i + k]) for i in range(len(tokens) - k + 1))


def similarity(a: Sequence[str], b: Sequence[str], k: int = SHINGLE) -> float:
    if not a and not b:
        return 1.0
    k = k if min(len(a), len(b)) >= k else 1
    sa, sb = _shingles(a, k), _shingles(b, k)
    total = sum(sa.values()) + sum(sb.values())
    if total == 0:
        return 1.0
    common = sum((sa & sb).values())
    return 2.0 * common / total


def detect_duplicated_component(components: Iterable[ComponentInfo], cfg: ThresholdConfig) -> list[Finding]:
    """Report each sufficiently similar unordered pair once, lexicographically smaller class first."""
    comps = sorted(components, key=lambda c: (c.class_name, c.file))
    tokens = {id(c): component_tokens(c) for c in comps}
    findings = []
    for a, b in combinations(comps, 2):
        ta, tb = tokens[id(a)], tokens[id(b)]
        if len(ta) < MIN_TOKENS or len(tb) < MIN_TOKENS:
            continue
        score = similarity(ta, tb)
        if score < cfg.duplicate_similarity:
            continue
        start, end = a.lines
        findings.append(
            Finding(
                Smell.DUPLICATED_COMPONENT,
                a.file,
                start,
                end,
                a.class_name,
                f"component is {score:.0%} similar to {b.class_name}",
                {"other": b.class_name, "other_file": b.file, "similarity": round(score, 3)},
            )
        )
    return findings
