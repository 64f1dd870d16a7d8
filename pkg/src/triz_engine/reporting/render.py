"""Deterministic report templating: same content in, identical bytes out.

The built-in layout orders the sections Problem, Identified Contradiction,
Inventive Principles, Solutions.  Users can override the layout by pointing
`template_dir` at a directory holding report.md.tmpl / report.tex.tmpl;
templates receive {problem}, {contradiction}, {principles}, and {solutions}
blocks pre-rendered for their format.
"""

from __future__ import annotations

from pathlib import Path

from .summarize import SummarizedContent

FORMATS = ("markdown", "latex")

TEMPLATE_FILES = {"markdown": "report.md.tmpl", "latex": "report.tex.tmpl"}

_LATEX_SPECIALS = {
    "\\": r"\textbackslash{}",
    "&": r"\&",
    "%": r"\%",
    "$": r"\$",
    "#": r"\#",
    "_": r"\_",
    "{": r"\{",
    "}": r"\}",
    "~": r"\textasciitilde{}",
    "^": r"\textasciicircum{}",
}


def latex_escape(text: str) -> str:
    return "".join(_LATEX_SPECIALS.get(ch, ch) for ch in text)


def render(content: SummarizedContent, fmt: str,
           template_dir: str | Path | None = None) -> str:
    """Expand the report template; total over valid content."""
    if fmt not in FORMATS:
        raise ValueError(f"format must be one of {FORMATS}, got {fmt!r}")
    if template_dir is not None:
        template = (Path(template_dir) / TEMPLATE_FILES[fmt]).read_text()
        return template.format(**_blocks(content, fmt))
    if fmt == "markdown":
        return _render_markdown(content)
    return _render_latex(content)


def _blocks(c: SummarizedContent, fmt: str) -> dict[str, str]:
    """Pre-rendered section bodies handed to user templates."""
    if fmt == "markdown":
        contradiction = (
            f"Improving parameter {c.improving.index}: **{c.improving.title}** — "
            f"worsening parameter {c.worsening.index}: **{c.worsening.title}**."
            f"\n\n{c.contradiction_note}")
        principles = "\n".join(f"- **{p.index}. {p.title}** — {p.description}"
                               for p in c.principles)
        solutions = "\n\n".join(
            f"## Solution {i}: {s.title} (principle {s.principle_index})\n\n{s.summary}"
            for i, s in enumerate(c.solutions, start=1))
        return {"problem": c.problem, "contradiction": contradiction,
                "principles": principles, "solutions": solutions}
    contradiction = (
        f"Improving parameter {c.improving.index}: "
        f"\\textbf{{{latex_escape(c.improving.title)}}} --- "
        f"worsening parameter {c.worsening.index}: "
        f"\\textbf{{{latex_escape(c.worsening.title)}}}."
        f"\n\n{latex_escape(c.contradiction_note)}")
    principles = "\n".join(
        f"\\item \\textbf{{{p.index}. {latex_escape(p.title)}}} --- "
        f"{latex_escape(p.description)}" for p in c.principles)
    solutions = "\n".join(
        f"\\subsection*{{Solution {i}: {latex_escape(s.title)} "
        f"(principle {s.principle_index})}}\n{latex_escape(s.summary)}"
        for i, s in enumerate(c.solutions, start=1))
    return {"problem": latex_escape(c.problem), "contradiction": contradiction,
            "principles": principles, "solutions": solutions}


def _render_markdown(c: SummarizedContent) -> str:
    lines = [
        "# Problem",
        "",
        c.problem,
        "",
        "# Identified Contradiction",
        "",
        (f"Improving parameter {c.improving.index}: **{c.improving.title}** — "
         f"worsening parameter {c.worsening.index}: **{c.worsening.title}**."),
        "",
        c.contradiction_note,
        "",
        "# Inventive Principles",
        "",
    ]
    for p in c.principles:
        lines.append(f"- **{p.index}. {p.title}** — {p.description}")
    lines += ["", "# Solutions", ""]
    for i, s in enumerate(c.solutions, start=1):
        lines += [
            f"## Solution {i}: {s.title} (principle {s.principle_index})",
            "",
            s.summary,
            "",
        ]
    return "\n".join(lines).rstrip() + "\n"


def _render_latex(c: SummarizedContent) -> str:
    out = [
        r"\documentclass{article}",
        r"\usepackage[margin=2.5cm]{geometry}",
        r"\begin{document}",
        "",
        r"\section*{Problem}",
        latex_escape(c.problem),
        "",
        r"\section*{Identified Contradiction}",
        (f"Improving parameter {c.improving.index}: "
         f"\\textbf{{{latex_escape(c.improving.title)}}} --- "
         f"worsening parameter {c.worsening.index}: "
         f"\\textbf{{{latex_escape(c.worsening.title)}}}."),
        "",
        latex_escape(c.contradiction_note),
        "",
        r"\section*{Inventive Principles}",
        r"\begin{itemize}",
    ]
    for p in c.principles:
        out.append(f"\\item \\textbf{{{p.index}. {latex_escape(p.title)}}} --- "
                   f"{latex_escape(p.description)}")
    out += [r"\end{itemize}", "", r"\section*{Solutions}"]
    for i, s in enumerate(c.solutions, start=1):
        out += [
            f"\\subsection*{{Solution {i}: {latex_escape(s.title)} "
            f"(principle {s.principle_index})}}",
            latex_escape(s.summary),
            "",
        ]
    out.append(r"\end{document}")
    return "\n".join(out) + "\n"
