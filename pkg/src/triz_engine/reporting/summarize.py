"""Condense a finished run into per-section prose with one model call.

Structured fields (indexes, parameter and principle titles) are copied
from the report record, never re-extracted from model prose.
"""

from __future__ import annotations

import json
from dataclasses import dataclass, field

from ..errors import DomainError
from ..gateway import FieldSpec, Gateway, IntRange, ListOf, NonEmptyText, ObjectSpec, complete_structured
from ..kb import Contradiction, EngineeringParameter, InventivePrinciple, KnowledgeBase
from ..pipeline import prompts
from ..pipeline.report import SolutionReport, TraceEntry

SUMMARY_SCHEMA = FieldSpec({
    "problem": NonEmptyText(),
    "contradiction": NonEmptyText(),
    "solutions": ListOf(ObjectSpec({
        "principle_index": IntRange(1, 40),
        "summary": NonEmptyText(),
    })),
})


@dataclass(frozen=True)
class SummarizedSolution:
    principle_index: int
    title: str      # from the report record
    summary: str    # condensed prose


@dataclass(frozen=True)
class SummarizedContent:
    report_id: str
    model_id: str
    problem: str
    improving: EngineeringParameter
    worsening: EngineeringParameter
    contradiction: Contradiction
    contradiction_note: str
    principles: tuple[InventivePrinciple, ...]
    solutions: tuple[SummarizedSolution, ...] = field(default_factory=tuple)


def content_from_report_doc(doc: dict, kb: KnowledgeBase) -> SummarizedContent:
    """Rebuild renderable content from a persisted report document."""
    summary = doc.get("summary")
    if not summary:
        raise DomainError("report document carries no summary section")
    c = Contradiction(doc["contradiction"]["improving"], doc["contradiction"]["worsening"])
    principles = tuple(kb.principle(p["index"]) for p in doc["principles"])
    solutions = tuple(SummarizedSolution(principle_index=s["principle_index"],
                                         title=s["title"], summary=s["summary"])
                      for s in summary["solutions"])
    return SummarizedContent(
        report_id=doc["id"], model_id=doc.get("model_id", ""),
        problem=summary["problem"], improving=kb.parameter(c.improving),
        worsening=kb.parameter(c.worsening), contradiction=c,
        contradiction_note=summary["contradiction_note"],
        principles=principles, solutions=solutions,
    )


def _report_text(report: SolutionReport, kb: KnowledgeBase) -> str:
    lines = [
        f"Problem: {report.problem.text}",
        f"Contradiction: {prompts.describe_contradiction(report.contradiction, kb)}",
        "Inventive principles:",
    ]
    lines += [p.serialize() for p in report.principles]
    lines.append("Solutions:")
    for s in report.solutions:
        lines.append(f"[PRINCIPLE {s.principle_index}] {s.title}: {s.body}")
    return "\n".join(lines)


def summarize(gateway: Gateway, report: SolutionReport, kb: KnowledgeBase, *,
              seed: int | None = None) -> SummarizedContent:
    """One LLM call producing condensed text for every report section."""
    req = prompts.compose_summarize(_report_text(report, kb), seed=seed)
    record = complete_structured(gateway, req, SUMMARY_SCHEMA)
    report.trace.append(TraceEntry("summarize", json.dumps(
        [{"role": m.role, "content": m.content} for m in req.messages],
        ensure_ascii=False), json.dumps(record, ensure_ascii=False)))

    titles = {s.principle_index: s.title for s in report.solutions}
    solutions = []
    for row in record["solutions"]:
        idx = row["principle_index"]
        if idx not in titles:
            raise DomainError(f"summary cites principle {idx} absent from the report")
        solutions.append(SummarizedSolution(principle_index=idx, title=titles[idx],
                                            summary=row["summary"].strip()))
    return SummarizedContent(
        report_id=report.id,
        model_id=report.model_id,
        problem=record["problem"].strip(),
        improving=kb.parameter(report.contradiction.improving),
        worsening=kb.parameter(report.contradiction.worsening),
        contradiction=report.contradiction,
        contradiction_note=record["contradiction"].strip(),
        principles=tuple(report.principles),
        solutions=tuple(solutions),
    )
