"""Background job execution over the document store.

Jobs move queued -> running -> done | failed; solve jobs expose the active
reasoning stage, trial batches a completed/total counter.  Any job found
queued or running at startup is re-marked failed with a restart notice so
interrupted work never silently duplicates.
"""

from __future__ import annotations

import logging
import threading
import time
import uuid
from concurrent.futures import ThreadPoolExecutor

from ..errors import NotFound, QueueFull, TrizEngineError, ValidationError
from ..evaluation import case_by_id, evaluate_case, load_case_base, write_evaluation
from ..gateway import Gateway
from ..kb import Contradiction, KnowledgeBase
from ..pipeline import PipelineOverrides, ProblemInput, run_pipeline, run_trials
from ..reporting import render
from .store import DocumentStore

logger = logging.getLogger(__name__)

KINDS = ("solve", "trials", "evaluate")
RESTART_NOTICE = "interrupted by service restart"


def _now() -> float:
    return time.time()


def serialize_report(report) -> dict:
    summary = report.summary
    return {
        "id": report.id,
        "input": report.input.raw_text,
        "problem": report.problem.text,
        "contradiction": {"improving": report.contradiction.improving,
                          "worsening": report.contradiction.worsening},
        "principles": [{"index": p.index, "title": p.title,
                        "description": p.description} for p in report.principles],
        "solutions": [{"principle_index": s.principle_index, "title": s.title,
                       "body": s.body} for s in report.solutions],
        "overrides_applied": sorted(report.overrides_applied),
        "trace": [{"stage": t.stage, "prompt": t.prompt, "response": t.response}
                  for t in report.trace],
        "model_id": report.model_id,
        "created_at": report.created_at,
        "finished_at": report.finished_at,
        "summary": None if summary is None else {
            "problem": summary.problem,
            "contradiction_note": summary.contradiction_note,
            "solutions": [{"principle_index": s.principle_index, "title": s.title,
                           "summary": s.summary} for s in summary.solutions],
        },
    }


def parse_overrides(raw: dict | None) -> PipelineOverrides:
    if not raw:
        return PipelineOverrides()
    contradiction = None
    if raw.get("contradiction") is not None:
        c = raw["contradiction"]
        pair = (c["improving"], c["worsening"]) if isinstance(c, dict) else tuple(c)
        try:
            contradiction = Contradiction(int(pair[0]), int(pair[1]))
        except TrizEngineError as exc:
            raise ValidationError(f"invalid contradiction override: {exc}") from exc
    principles = raw.get("principles")
    try:
        return PipelineOverrides(
            problem=raw.get("problem"),
            contradiction=contradiction,
            principles=[int(p) for p in principles] if principles else None,
        )
    except TrizEngineError as exc:
        raise ValidationError(str(exc)) from exc


class JobExecutor:
    def __init__(self, store: DocumentStore, kb: KnowledgeBase, gateway: Gateway,
                 case_dir=None, max_workers: int = 2, max_pending: int = 32):
        self.store = store
        self.kb = kb
        self.gateway = gateway
        self.case_dir = case_dir
        self.max_pending = max_pending
        self._pool = ThreadPoolExecutor(max_workers=max_workers,
                                        thread_name_prefix="triz-job")
        self._guard = threading.Lock()
        self._recover_interrupted()

    def _recover_interrupted(self):
        for job_id in self.store.ids("jobs"):
            doc = self.store.read("jobs", job_id)
            if doc.get("state") in ("queued", "running"):
                doc["state"] = "failed"
                doc["error"] = RESTART_NOTICE
                doc["updated_at"] = _now()
                self.store.write("jobs", job_id, doc)
                logger.warning("job %s re-marked failed after restart", job_id)

    def _pending_count(self) -> int:
        count = 0
        for job_id in self.store.ids("jobs"):
            try:
                if self.store.read("jobs", job_id).get("state") in ("queued", "running"):
                    count += 1
            except NotFound:
                continue
        return count

    def submit(self, request: dict) -> str:
        kind = request.get("kind")
        if kind not in KINDS:
            raise ValidationError(f"kind must be one of {KINDS}")
        if kind == "solve":
            if not str(request.get("problem_text") or "").strip() \
                    and not request.get("case_id"):
                raise ValidationError("solve needs problem_text or case_id")
        if kind in ("trials", "evaluate"):
            n = request.get("n")
            if not isinstance(n, int) or n < 1:
                raise ValidationError("n must be an integer >= 1")
            if not str(request.get("problem_text") or "").strip() \
                    and not request.get("case_id"):
                raise ValidationError(f"{kind} needs problem_text or case_id")
        overrides = parse_overrides(request.get("overrides"))

        key = request.get("idempotency_key")
        with self._guard:
            if key:
                for job_id in self.store.ids("jobs"):
                    doc = self.store.read("jobs", job_id)
                    if doc.get("idempotency_key") == key:
                        return job_id
            if self._pending_count() >= self.max_pending:
                raise QueueFull(f"more than {self.max_pending} jobs pending")

            job_id = uuid.uuid4().hex
            doc = {
                "id": job_id,
                "kind": kind,
                "state": "queued",
                "stage": None,
                "progress": None,
                "result_ref": None,
                "error": None,
                "request": {k: v for k, v in request.items() if k != "idempotency_key"},
                "idempotency_key": key,
                "created_at": _now(),
                "updated_at": _now(),
            }
            self.store.write("jobs", job_id, doc)
        self._pool.submit(self._run, job_id, request, overrides)
        return job_id

    def get(self, job_id: str) -> dict:
        return self.store.read("jobs", job_id)

    def _update(self, job_id: str, **changes):
        doc = self.store.read("jobs", job_id)
        doc.update(changes)
        doc["updated_at"] = _now()
        self.store.write("jobs", job_id, doc)

    def _problem_text(self, request: dict) -> str:
        text = str(request.get("problem_text") or "").strip()
        if text:
            return text
        cases = load_case_base(self.case_dir)
        return case_by_id(cases, request["case_id"]).problem_statement

    def _run(self, job_id: str, request: dict, overrides: PipelineOverrides):
        kind = request["kind"]
        try:
            self._update(job_id, state="running")
            if kind == "solve":
                result_ref = self._run_solve(job_id, request, overrides)
            elif kind == "trials":
                result_ref = self._run_trials(job_id, request)
            else:
                result_ref = self._run_evaluate(job_id, request)
            self._update(job_id, state="done", result_ref=result_ref, stage=None)
        except Exception as exc:
            logger.exception("job %s failed", job_id)
            self._update(job_id, state="failed", error=str(exc), stage=None)

    def _run_solve(self, job_id: str, request: dict,
                   overrides: PipelineOverrides) -> str:
        text = self._problem_text(request)
        seed = request.get("seed")

        def on_stage(stage: str):
            self._update(job_id, stage=stage)

        report = run_pipeline(self.gateway, ProblemInput(text), self.kb, overrides,
                              seed=seed, on_stage=on_stage)
        self.store.write("reports", report.id, serialize_report(report))
        if report.summary is not None:
            self.store.write_text("reports", report.id,
                                  render(report.summary, "markdown"), suffix=".md")
            self.store.write_text("reports", report.id,
                                  render(report.summary, "latex"), suffix=".tex")
        return report.id

    def _run_trials(self, job_id: str, request: dict) -> str:
        text = self._problem_text(request)
        n = int(request["n"])

        def on_progress(done: int, total: int):
            self._update(job_id, progress={"completed": done, "total": total})

        distribution = run_trials(self.gateway, ProblemInput(text), self.kb, n,
                                  on_progress=on_progress)
        doc = {
            "job_id": job_id,
            "n_requested": distribution.n_requested,
            "failures": distribution.failures,
            "counts": [{"improving": c.improving, "worsening": c.worsening,
                        "count": count}
                       for c, count in sorted(distribution.counts.items(),
                                              key=lambda kv: (-kv[1], kv[0].as_tuple()))],
        }
        self.store.write("trials", job_id, doc)
        return job_id

    def _run_evaluate(self, job_id: str, request: dict) -> str:
        cases = load_case_base(self.case_dir)
        case = case_by_id(cases, request["case_id"])
        n = int(request["n"])
        k = int(request.get("k", 3))

        def on_progress(done: int, total: int):
            self._update(job_id, progress={"completed": done, "total": total})

        distribution = run_trials(self.gateway, ProblemInput(case.problem_statement),
                                  self.kb, n, on_progress=on_progress)
        evaluation = evaluate_case(case, distribution, k)
        write_evaluation(self.store.root / "eval", evaluation, distribution)
        return case.id
