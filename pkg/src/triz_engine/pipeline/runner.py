"""The four-step reasoning flow: distill, identify, look up, generate.

Stages whose output the caller overrides are skipped; the matrix lookup is
always executed natively against the knowledge base, never by the model.
Trial batches repeat distill+identify with per-trial seeds so that every
exchange is individually addressable in record/replay transcripts.
"""

from __future__ import annotations

import json
import logging
from concurrent.futures import ThreadPoolExecutor
from typing import Callable

from ..errors import (
    DomainError,
    EmptyDistillation,
    InvariantViolation,
    MissingPrincipleCoverage,
    PipelineError,
    TrizEngineError,
)
from ..evaluation.stats import TrialDistribution
from ..gateway import (
    FieldSpec,
    Gateway,
    IntRange,
    ListOf,
    NonEmptyText,
    ObjectSpec,
    complete_structured,
)
from ..kb import Contradiction, InventivePrinciple, KnowledgeBase
from . import prompts
from .report import (
    FailedRun,
    PipelineOverrides,
    ProblemDescription,
    ProblemInput,
    Solution,
    SolutionReport,
    TraceEntry,
    new_run_id,
    now,
)

logger = logging.getLogger(__name__)

CONTRADICTION_SCHEMA = FieldSpec({"improving": IntRange(1, 39),
                                  "worsening": IntRange(1, 39)})

SOLUTIONS_SCHEMA = FieldSpec({"solutions": ListOf(ObjectSpec({
    "principle_index": IntRange(1, 40),
    "title": NonEmptyText(),
    "body": NonEmptyText(),
}))})


def _messages_text(req) -> str:
    return json.dumps([{"role": m.role, "content": m.content} for m in req.messages],
                      ensure_ascii=False)


def distill_problem(gateway: Gateway, u: ProblemInput, *,
                    seed: int | None = None,
                    trace: list[TraceEntry] | None = None) -> ProblemDescription:
    """Condense the raw user statement into a clear problem description."""
    req = prompts.compose_distill(u.raw_text, seed=seed)
    text = gateway.complete(req)
    if trace is not None:
        trace.append(TraceEntry("distill", _messages_text(req), text))
    if not text.strip():
        raise EmptyDistillation("model returned a blank distillation")
    return ProblemDescription(text=text.strip(), source_length=len(u.raw_text))


def identify_contradiction(gateway: Gateway, t: ProblemDescription,
                           kb: KnowledgeBase, *, seed: int | None = None,
                           trace: list[TraceEntry] | None = None) -> Contradiction:
    """Map the problem description onto an (improving, worsening) pair.

    The full 39-parameter list rides along as assistant context; the model
    answers with the two indexes in structured form.
    """
    req = prompts.compose_identify(t.text, kb, seed=seed)
    record = complete_structured(gateway, req, CONTRADICTION_SCHEMA)
    if trace is not None:
        trace.append(TraceEntry("identify", _messages_text(req),
                                json.dumps(record, ensure_ascii=False)))
    try:
        return Contradiction(record["improving"], record["worsening"])
    except (InvariantViolation, TrizEngineError) as exc:
        raise DomainError(f"model produced an invalid contradiction: {exc}") from exc


def generate_solutions(gateway: Gateway, t: ProblemDescription,
                       c: Contradiction | None,
                       principles: list[InventivePrinciple],
                       kb: KnowledgeBase, *, seed: int | None = None,
                       trace: list[TraceEntry] | None = None) -> list[Solution]:
    """Apply each supplied principle to the problem; at least one solution per
    principle, each tagged with the principle it implements."""
    if not principles:
        raise InvariantViolation("generate_solutions needs a non-empty principle list")
    req = prompts.compose_generate(t.text, c, principles, kb, seed=seed)
    record = complete_structured(gateway, req, SOLUTIONS_SCHEMA)
    if trace is not None:
        trace.append(TraceEntry("generate", _messages_text(req),
                                json.dumps(record, ensure_ascii=False)))
    supplied = {p.index for p in principles}
    solutions = []
    for row in record["solutions"]:
        if row["principle_index"] not in supplied:
            raise DomainError(
                f"solution cites principle {row['principle_index']} that was not supplied")
        solutions.append(Solution(principle_index=row["principle_index"],
                                  title=row["title"].strip(),
                                  body=row["body"].strip()))
    uncovered = supplied - {s.principle_index for s in solutions}
    if uncovered:
        raise MissingPrincipleCoverage(
            f"no solution produced for principles {sorted(uncovered)}")
    return solutions


def run_pipeline(gateway: Gateway, u: ProblemInput, kb: KnowledgeBase,
                 ov: PipelineOverrides | None = None, *,
                 seed: int | None = None,
                 summarize: bool = True,
                 on_stage: Callable[[str], None] | None = None) -> SolutionReport:
    """Execute distill -> identify -> lookup -> generate -> summarize.

    Any stage whose output is overridden is skipped and the substitution is
    recorded in overrides_applied.  A stage error aborts the run and raises
    PipelineError carrying a FailedRun with the partial trace.
    """
    ov = ov or PipelineOverrides()
    run_id = new_run_id()
    started = now()
    trace: list[TraceEntry] = []
    stage = "distill"

    def notify(name: str):
        nonlocal stage
        stage = name
        if on_stage:
            on_stage(name)

    try:
        notify("distill")
        if ov.problem is not None:
            problem = ProblemDescription(text=ov.problem)
        else:
            problem = distill_problem(gateway, u, seed=seed, trace=trace)

        notify("identify")
        if ov.contradiction is not None:
            contradiction = ov.contradiction
        else:
            contradiction = identify_contradiction(gateway, problem, kb,
                                                   seed=seed, trace=trace)

        notify("lookup")
        if ov.principles is not None:
            principles = [kb.principle(i) for i in ov.principles]
        else:
            principles = kb.lookup_principles(contradiction)

        notify("generate")
        solutions = generate_solutions(gateway, problem, contradiction,
                                       principles, kb, seed=seed, trace=trace)

        report = SolutionReport(
            id=run_id, input=u, problem=problem, contradiction=contradiction,
            principles=principles, solutions=solutions,
            overrides_applied=ov.applied(), trace=trace,
            model_id=gateway.cfg.model_id, created_at=started, finished_at=now(),
        )

        if summarize:
            notify("summarize")
            from ..reporting import summarize as do_summarize
            report.summary = do_summarize(gateway, report, kb, seed=seed)
            report.finished_at = now()
        return report
    except TrizEngineError as exc:
        failed = FailedRun(id=run_id, input=u, error=str(exc), stage=stage,
                           trace=trace, overrides_applied=ov.applied())
        raise PipelineError(f"{stage} stage failed: {exc}", failed_run=failed) from exc


def run_trials(gateway: Gateway, u: ProblemInput, kb: KnowledgeBase,
               n: int, *, on_progress: Callable[[int, int], None] | None = None,
               ) -> TrialDistribution:
    """n independent distill+identify executions, tallied per contradiction.

    Generation is skipped: only the detected contradictions matter.  Trial
    i uses seed=i, so each exchange maps to its own transcript entry.
    Individual failures are recorded and excluded from counts; the batch
    fails only if every trial does.
    """
    if n < 1:
        raise InvariantViolation("trial count must be >= 1")

    def one_trial(i: int) -> Contradiction:
        problem = distill_problem(gateway, u, seed=i)
        return identify_contradiction(gateway, problem, kb, seed=i)

    counts: dict[Contradiction, int] = {}
    failures = 0
    done = 0
    workers = min(n, gateway.cfg.concurrency_cap)
    with ThreadPoolExecutor(max_workers=workers) as pool:
        for result in pool.map(_guard(one_trial), range(n)):
            done += 1
            if isinstance(result, Contradiction):
                counts[result] = counts.get(result, 0) + 1
            else:
                failures += 1
                logger.warning("trial failed: %s", result)
            if on_progress:
                on_progress(done, n)

    if failures == n:
        raise PipelineError(f"all {n} trials failed")
    return TrialDistribution(counts=counts, failures=failures, n_requested=n)


def _guard(fn):
    def wrapped(i):
        try:
            return fn(i)
        except TrizEngineError as exc:
            return exc
    return wrapped
