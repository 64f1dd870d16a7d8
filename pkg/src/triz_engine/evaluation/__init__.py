"""Evaluation harness: case base, trial statistics, match categorization."""

from .cases import (
    CaseRecord,
    case_by_id,
    default_case_dir,
    evaluation_to_dict,
    load_case_base,
    write_evaluation,
)
from .stats import (
    CaseEvaluation,
    MatchCategory,
    TrialDistribution,
    categorize_match,
    entropy,
    evaluate_case,
    top_k,
)

__all__ = [
    "CaseEvaluation",
    "CaseRecord",
    "MatchCategory",
    "TrialDistribution",
    "case_by_id",
    "categorize_match",
    "default_case_dir",
    "entropy",
    "evaluate_case",
    "evaluation_to_dict",
    "load_case_base",
    "top_k",
    "write_evaluation",
]
