"""Four-step TRIZ reasoning flow with user overrides and trial batches."""

from .prompts import load_prompt, prompt_checksums, prompt_dir
from .report import (
    FailedRun,
    PipelineOverrides,
    ProblemDescription,
    ProblemInput,
    Solution,
    SolutionReport,
    TraceEntry,
)
from .runner import (
    distill_problem,
    generate_solutions,
    identify_contradiction,
    run_pipeline,
    run_trials,
)

__all__ = [
    "FailedRun",
    "PipelineOverrides",
    "ProblemDescription",
    "ProblemInput",
    "Solution",
    "SolutionReport",
    "TraceEntry",
    "distill_problem",
    "generate_solutions",
    "identify_contradiction",
    "load_prompt",
    "prompt_checksums",
    "prompt_dir",
    "run_pipeline",
    "run_trials",
]
