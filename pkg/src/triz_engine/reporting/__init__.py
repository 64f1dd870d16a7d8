"""Reader-facing report assembly: LLM-condensed prose, deterministic templates."""

from .render import FORMATS, latex_escape, render
from .summarize import (
    SummarizedContent,
    SummarizedSolution,
    content_from_report_doc,
    summarize,
)

__all__ = [
    "FORMATS",
    "SummarizedContent",
    "SummarizedSolution",
    "content_from_report_doc",
    "latex_escape",
    "render",
    "summarize",
]
