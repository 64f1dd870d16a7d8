"""Records produced by pipeline runs: inputs, solutions, traces, overrides."""

from __future__ import annotations

import time
import uuid
from dataclasses import dataclass, field

from ..errors import EmptyDistillation, InvariantViolation
from ..kb import Contradiction, InventivePrinciple

TRACE_STAGES = ("distill", "identify", "generate", "summarize")


@dataclass(frozen=True)
class ProblemInput:
    raw_text: str

    def __post_init__(self):
        if not self.raw_text.strip():
            raise InvariantViolation("problem input must be non-empty")


@dataclass(frozen=True)
class ProblemDescription:
    """Distilled problem statement; a condensation, never an expansion."""

    text: str
    source_length: int | None = None

    def __post_init__(self):
        if not self.text.strip():
            raise EmptyDistillation("distilled problem statement is blank")
        if self.source_length is not None and len(self.text) > 2 * self.source_length:
            raise InvariantViolation(
                "distilled statement longer than twice the input "
                f"({len(self.text)} > 2*{self.source_length})")


@dataclass(frozen=True)
class Solution:
    principle_index: int
    title: str
    body: str


@dataclass(frozen=True)
class TraceEntry:
    stage: str
    prompt: str
    response: str

    def __post_init__(self):
        if self.stage not in TRACE_STAGES:
            raise InvariantViolation(f"unknown trace stage {self.stage!r}")


@dataclass
class PipelineOverrides:
    """User-supplied substitutions for individual reasoning stages."""

    problem: str | None = None
    contradiction: Contradiction | None = None
    principles: list[int] | None = None

    def __post_init__(self):
        if self.principles is not None:
            if not self.principles:
                raise InvariantViolation("principles override must be non-empty")
            for p in self.principles:
                if not 1 <= int(p) <= 40:
                    raise InvariantViolation(f"principle override {p} outside 1..40")

    def applied(self) -> set[str]:
        out = set()
        if self.problem is not None:
            out.add("problem")
        if self.contradiction is not None:
            out.add("contradiction")
        if self.principles is not None:
            out.add("principles")
        return out


@dataclass
class SolutionReport:
    """Full trace of one pipeline run."""

    id: str
    input: ProblemInput
    problem: ProblemDescription
    contradiction: Contradiction
    principles: list[InventivePrinciple]
    solutions: list[Solution]
    overrides_applied: set[str] = field(default_factory=set)
    trace: list[TraceEntry] = field(default_factory=list)
    model_id: str = ""
    created_at: float = 0.0
    finished_at: float = 0.0
    summary: "object | None" = None  # reporting.SummarizedContent once summarized

    def __post_init__(self):
        if not self.solutions:
            raise InvariantViolation("a successful run must record at least one solution")
        supplied = {p.index for p in self.principles}
        for s in self.solutions:
            if s.principle_index not in supplied:
                raise InvariantViolation(
                    f"solution cites unsupplied principle {s.principle_index}")


@dataclass
class FailedRun:
    """Partial record of a run aborted by a stage error."""

    id: str
    input: ProblemInput
    error: str
    stage: str
    trace: list[TraceEntry] = field(default_factory=list)
    overrides_applied: set[str] = field(default_factory=set)


def new_run_id() -> str:
    return uuid.uuid4().hex


def now() -> float:
    return time.time()
