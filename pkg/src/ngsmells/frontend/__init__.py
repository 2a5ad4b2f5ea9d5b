"""Parsing front-end: TypeScript sources and Angular templates."""

from ngsmells.frontend.resolve import ResolvedTemplate, TemplateOrigin, resolve_template
from ngsmells.frontend.template import Binding, BindingKind, TemplateAst, parse_template
from ngsmells.frontend.typescript import (
    ClassDecl,
    Decorator,
    LineIndex,
    Span,
    SyntaxTree,
    TypeAnnotation,
    parse_typescript,
)

__all__ = [
    "Binding",
    "BindingKind",
    "ClassDecl",
    "Decorator",
    "LineIndex",
    "ResolvedTemplate",
    "Span",
    "SyntaxTree",
    "TemplateAst",
    "TemplateOrigin",
    "TypeAnnotation",
    "parse_template",
    "parse_typescript",
    "resolve_template",
]
