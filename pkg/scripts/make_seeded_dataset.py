"""Regenerate datasets/seeded: smelly/refactored pairs for the five evaluated smells.

Each pair starts from a catalog listing shape and varies entity names, member counts
and layout mechanically. Refactored variants remove the smell the way a developer would
(typing, extraction into services/children, composition, one declaration per file).

    python3 scripts/make_seeded_dataset.py [--out datasets/seeded]
"""

from __future__ import annotations

import argparse
import json
import shutil
from pathlib import Path

ENTITIES = ["user", "order", "invoice", "product", "ticket", "report", "account", "device", "booking", "message", "course", "patient"]


def cap(s: str) -> str:
    return s[:1].upper() + s[1:]


def kebab(s: str) -> str:
    return s.lower()


# --- Overusing Any Type ---------------------------------------------------------

ANY_SHAPES = [
    # (smelly member lines, refactored member lines)
    (["{e}: any;", "{e}s: any[] = [];"], ["{e}: {E} | null = null;", "{e}s: {E}[] = [];"]),
    (["load(id: any): void {{", "  this.api.get(id).subscribe((data: any) => {{ this.current = data; }});", "}}"],
     ["load(id: number): void {{", "  this.api.get(id).subscribe((data: {E}) => {{ this.current = data; }});", "}}"]),
    (["parse(raw: string): any {{", "  return JSON.parse(raw);", "}}"],
     ["parse(raw: string): {E} {{", "  return JSON.parse(raw) as {E};", "}}"]),
    (["cache = new Map<string, any>();"], ["cache = new Map<string, {E}>();"]),
    (["toView(x: unknown) {{", "  return (x as any).name;", "}}"],
     ["toView(x: {E}) {{", "  return x.name;", "}}"]),
    (["meta: Record<string, any> = {{}};"], ["meta: Record<string, string> = {{}};"]),
]


def any_pair(i: int) -> tuple[dict[str, str], dict[str, str]]:
    e = ENTITIES[i % len(ENTITIES)]
    shapes = [ANY_SHAPES[(i + k) % len(ANY_SHAPES)] for k in range(1 + i % 3)]

    def render(pick: int) -> str:
        body: list[str] = []
        for shape in shapes:
            body += ["  " + line.format(e=e, E=cap(e)) for line in shape[pick]]
            body.append("")
        return "\n".join(
            [
                "import { Component } from '@angular/core';",
                f"import {{ {cap(e)}, Api }} from './{kebab(e)}.model';",
                "",
                "@Component({",
                f"  selector: 'app-{kebab(e)}-detail',",
                f"  template: `<p>{{{{ current?.name }}}}</p>`",
                "})",
                f"export class {cap(e)}DetailComponent {{",
                f"  current: {cap(e)} | null = null;",
                "  constructor(private api: Api) {}",
                "",
                *body,
                "}",
                "",
            ]
        )

    model = "\n".join(
        [
            f"export interface {cap(e)} {{",
            "  id: number;",
            "  name: string;",
            "}",
            "",
            "export interface Api {",
            f"  get(id: number): {{ subscribe(cb: (v: {cap(e)}) => void): void }};",
            "}",
            "",
        ]
    )
    name = f"{kebab(e)}-detail.component.ts"
    return (
        {name: render(0), f"{kebab(e)}.model.ts": model},
        {name: render(1), f"{kebab(e)}.model.ts": model},
    )


# --- Large Component -------------------------------------------------------------


def _method(name: str, n: int, field: str) -> list[str]:
    out = [f"  {name}(): void {{"]
    for k in range(n):
        out.append(f"    this.{field} = this.{field} + {k + 1};")
    out.append("  }")
    out.append("")
    return out


def large_component_pair(i: int) -> tuple[dict[str, str], dict[str, str]]:
    e = ENTITIES[i % len(ENTITIES)]
    concerns = ["load", "log", "chart"]
    per = 20 + 3 * i  # lines per method body
    methods_per_concern = 3

    def component(name: str, selector: str, concern_list: list[str], template: str) -> list[str]:
        lines = [
            "@Component({",
            f"  selector: '{selector}',",
            f"  template: `{template}`",
            "})",
            f"export class {name} {{",
        ]
        for c in concern_list:
            lines.append(f"  {c}Total = 0;")
        lines.append("")
        for c in concern_list:
            for m in range(methods_per_concern):
                lines += _method(f"{c}{cap(e)}{m}", per, f"{c}Total")
        lines[-1] = "}"
        return lines

    smelly = "\n".join(
        ["import { Component } from '@angular/core';", ""]
        + component(f"{cap(e)}DashboardComponent", f"app-{kebab(e)}-dashboard", concerns, "<p>{{ loadTotal }}</p>")
    ) + "\n"

    refactored: dict[str, str] = {}
    children = []
    for c in concerns:
        cls = f"{cap(e)}{cap(c)}PanelComponent"
        sel = f"app-{kebab(e)}-{c}-panel"
        children.append(f"<{sel}></{sel}>")
        # cap each panel near 150 lines so it stays below the default threshold
        body = ["@Component({", f"  selector: '{sel}',", f"  template: `<p>{{{{ {c}Total }}}}</p>`", "})", f"export class {cls} {{", f"  {c}Total = 0;", ""]
        for m in range(min(methods_per_concern, max(1, 150 // (per + 3)))):
            body += _method(f"{c}{cap(e)}{m}", per, f"{c}Total")
        body[-1] = "}"
        refactored[f"{kebab(e)}-{c}-panel.component.ts"] = "\n".join(["import { Component } from '@angular/core';", ""] + body) + "\n"
    shell = [
        "import { Component } from '@angular/core';",
        "",
        "@Component({",
        f"  selector: 'app-{kebab(e)}-dashboard',",
        f"  template: `{''.join(children)}`",
        "})",
        f"export class {cap(e)}DashboardComponent {{}}",
    ]
    refactored[f"{kebab(e)}-dashboard.component.ts"] = "\n".join(shell) + "\n"
    return {f"{kebab(e)}-dashboard.component.ts": smelly}, refactored


# --- Large File ------------------------------------------------------------------


def _component_decl(e: str, suffix: str) -> list[str]:
    return [
        f"@Component({{ selector: 'app-{kebab(e)}-{suffix}', template: `<p>{{{{ title }}}}</p>` }})",
        f"export class {cap(e)}{cap(suffix)}Component {{ title = '{cap(e)} {suffix}'; }}",
        "",
    ]


def _service_decl(e: str, suffix: str) -> list[str]:
    return [
        "@Injectable({ providedIn: 'root' })",
        f"export class {cap(e)}{cap(suffix)}Service {{",
        f"  run(event: string) {{ return event + '{suffix}'; }}",
        "}",
        "",
    ]


def large_file_pair(i: int) -> tuple[dict[str, str], dict[str, str]]:
    e = ENTITIES[i % len(ENTITIES)]
    header = ["import { Component, Injectable } from '@angular/core';", ""]
    if i % 2 == 0:
        # aggregated declarations: 3..5 decorated classes in one file
        parts = [("header", "c"), ("footer", "c"), ("analytics", "s"), ("session", "s"), ("sidebar", "c")][: 3 + i % 3]
        smelly_lines = list(header)
        refactored: dict[str, str] = {}
        for suffix, kind in parts:
            decl = _component_decl(e, suffix) if kind == "c" else _service_decl(e, suffix)
            smelly_lines += decl
            refactored[f"{kebab(e)}-{suffix}.{'component' if kind == 'c' else 'service'}.ts"] = "\n".join(header + decl)
        return {f"{kebab(e)}.ts": "\n".join(smelly_lines)}, refactored
    # one oversized file: a component plus a long list of helper functions
    helpers_total = 410 + 7 * i
    smelly_lines = list(header) + _component_decl(e, "view")
    helper_lines: list[str] = []
    k = 0
    while len(smelly_lines) + len(helper_lines) < helpers_total:
        helper_lines += [f"export function {e}Helper{k}(x: number): number {{", f"  return x * {k + 2};", "}", ""]
        k += 1
    smelly = "\n".join(smelly_lines + helper_lines)
    refactored = {f"{kebab(e)}-view.component.ts": "\n".join(header + _component_decl(e, "view"))}
    chunk = 200
    for n, start in enumerate(range(0, len(helper_lines), chunk)):
        refactored[f"{kebab(e)}-helpers-{n}.ts"] = "\n".join(helper_lines[start : start + chunk])
    return {f"{kebab(e)}.ts": smelly}, refactored


# --- Inheritance Instead of Composition ------------------------------------------


def inheritance_pair(i: int) -> tuple[dict[str, str], dict[str, str]]:
    e = ENTITIES[i % len(ENTITIES)]
    abstract = "abstract " if i % 2 == 0 else ""
    base = [
        f"export {abstract}class Base{cap(e)}PageComponent {{",
        "  pageTitle = '';",
        "  initPage() {",
        "    console.log(`Initializing page: ${this.pageTitle}`);",
        "  }",
        "}",
        "",
    ]
    comp_head = ["@Component({", f"  selector: 'app-{kebab(e)}-page',", "  template: `<h1>{{ pageTitle }}</h1>`", "})"]
    imports = ["import { Component, Injectable } from '@angular/core';"]
    if i % 3 == 0:
        # base class lives next to the component
        smelly = {
            f"{kebab(e)}-page.component.ts": "\n".join(
                imports + [""] + base + comp_head + [f"export class {cap(e)}PageComponent extends Base{cap(e)}PageComponent {{", f"  pageTitle = '{cap(e)} Page';", "}", ""]
            )
        }
    else:
        smelly = {
            f"base-{kebab(e)}-page.ts": "\n".join(base),
            f"{kebab(e)}-page.component.ts": "\n".join(
                imports
                + [f"import {{ Base{cap(e)}PageComponent }} from './base-{kebab(e)}-page';", ""]
                + comp_head
                + [f"export class {cap(e)}PageComponent extends Base{cap(e)}PageComponent {{", f"  pageTitle = '{cap(e)} Page';", "}", ""]
            ),
        }
    refactored = {
        f"page-title.service.ts": "\n".join(
            imports
            + [
                "",
                "@Injectable({ providedIn: 'root' })",
                "export class PageTitleService {",
                "  initPage(title: string) {",
                "    console.log(`Initializing page: ${title}`);",
                "  }",
                "}",
                "",
            ]
        ),
        f"{kebab(e)}-page.component.ts": "\n".join(
            imports
            + ["import { PageTitleService } from './page-title.service';", ""]
            + comp_head
            + [
                f"export class {cap(e)}PageComponent {{",
                f"  pageTitle = '{cap(e)} Page';",
                "  constructor(private titles: PageTitleService) {}",
                "  ngOnInit() {",
                "    this.titles.initPage(this.pageTitle);",
                "  }",
                "}",
                "",
            ]
        ),
    }
    return smelly, refactored


# --- Too Many Inputs -------------------------------------------------------------

INPUT_FIELDS = [
    ("name", "string"),
    ("age", "number"),
    ("email", "string"),
    ("role", "string"),
    ("isActive", "boolean"),
    ("showAvatar", "boolean"),
    ("highlight", "boolean"),
    ("locale", "string"),
    ("theme", "string"),
    ("compact", "boolean"),
]


def too_many_inputs_pair(i: int) -> tuple[dict[str, str], dict[str, str]]:
    e = ENTITIES[i % len(ENTITIES)]
    n = 6 + i % 5
    fields = INPUT_FIELDS[:n]
    signal_style = i % 4 == 3
    head = ["import { Component, Input, input } from '@angular/core';", ""]
    deco = ["@Component({", f"  selector: 'app-{kebab(e)}-card',", f"  template: `<div>{{{{ {fields[0][0]} }}}}</div>`", "})"]
    if signal_style:
        members = [f"  {f} = input<{t}>();" for f, t in fields]
    else:
        members = [f"  @Input() {f}!: {t};" for f, t in fields]
    smelly = "\n".join(head + deco + [f"export class {cap(e)}CardComponent {{"] + members + ["}", ""])
    iface = [f"export interface {cap(e)}CardConfig {{"] + [f"  {f}: {t};" for f, t in fields] + ["}", ""]
    deco_r = ["@Component({", f"  selector: 'app-{kebab(e)}-card',", f"  template: `<div>{{{{ config.{fields[0][0]} }}}}</div>`", "})"]
    refactored = "\n".join(head + iface + deco_r + [f"export class {cap(e)}CardComponent {{", f"  @Input() config!: {cap(e)}CardConfig;", "}", ""])
    name = f"{kebab(e)}-card.component.ts"
    return {name: smelly}, {name: refactored}


GENERATORS = {
    "OverusingAnyType": ("any", any_pair),
    "LargeComponent": ("large-component", large_component_pair),
    "LargeFile": ("large-file", large_file_pair),
    "InheritanceInsteadOfComposition": ("inheritance", inheritance_pair),
    "TooManyInputs": ("too-many-inputs", too_many_inputs_pair),
}


def generate(out: Path, pairs: int = 12) -> list[dict[str, str]]:
    if out.exists():
        shutil.rmtree(out)
    manifest: list[dict[str, str]] = []
    for smell, (slug, gen) in GENERATORS.items():
        for i in range(pairs):
            ident = f"{slug}-{i + 1:02d}"
            for variant, files in zip(("Smelly", "Refactored"), gen(i)):
                rel = f"{ident}/{variant.lower()}"
                for name, text in files.items():
                    path = out / rel / name
                    path.parent.mkdir(parents=True, exist_ok=True)
                    path.write_text(text if text.endswith("\n") else text + "\n", encoding="utf-8")
                manifest.append({"id": ident, "smell": smell, "variant": variant, "path": rel})
    (out / "manifest.json").write_text(json.dumps(manifest, indent=2) + "\n", encoding="utf-8")
    return manifest


def main() -> None:
    parser = argparse.ArgumentParser(description=__doc__.splitlines()[0])
    parser.add_argument("--out", default=str(Path(__file__).resolve().parent.parent / "datasets" / "seeded"))
    parser.add_argument("--pairs", type=int, default=12)
    args = parser.parse_args()
    manifest = generate(Path(args.out), args.pairs)
    print(f"wrote {len(manifest)} instances to {args.out}")


if __name__ == "__main__":
    main()
