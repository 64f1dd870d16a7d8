"""Statistics over repeated contradiction detections.

N independent pipeline trials yield a frequency distribution of detected
contradictions; consistency is scored with information entropy in bits and
detections are compared against an expert reference as complete, half, or
no match.
"""

from __future__ import annotations

import enum
import math
from dataclasses import dataclass, field

from ..errors import EmptyDistribution
from ..kb import Contradiction


@dataclass(frozen=True)
class TrialDistribution:
    """Frequency counts of contradictions over a batch of trials."""

    counts: dict[Contradiction, int] = field(default_factory=dict)
    failures: int = 0
    n_requested: int = 0

    def __post_init__(self):
        for c, n in self.counts.items():
            if n < 1:
                raise ValueError(f"count for {c} must be >= 1, got {n}")
        if self.failures < 0:
            raise ValueError("failures must be >= 0")
        total = sum(self.counts.values()) + self.failures
        if self.n_requested and total != self.n_requested:
            raise ValueError(
                f"counts + failures must equal n_requested ({total} != {self.n_requested})")

    @property
    def n_counted(self) -> int:
        return sum(self.counts.values())


class MatchCategory(enum.Enum):
    COMPLETE = "complete"
    HALF = "half"
    NONE = "none"


_RANK = {MatchCategory.COMPLETE: 2, MatchCategory.HALF: 1, MatchCategory.NONE: 0}


def entropy(d: TrialDistribution) -> float:
    """Shannon entropy of the distribution in bits.

    Probabilities are counts over counted trials; failures are excluded.
    0 <= H <= log2(number of distinct outcomes).
    """
    total = d.n_counted
    if total < 1:
        raise EmptyDistribution("entropy needs at least one counted trial")
    return -sum((n / total) * math.log2(n / total) for n in d.counts.values())


def categorize_match(detected: Contradiction, reference: Contradiction) -> MatchCategory:
    """Overlap between a detection and the expert reference.

    Complete only when both roles agree; a pair that matches with roles
    swapped counts as half (the matrix is role-ordered and asymmetric), as
    does a single same-role index match.
    """
    same_improving = detected.improving == reference.improving
    same_worsening = detected.worsening == reference.worsening
    if same_improving and same_worsening:
        return MatchCategory.COMPLETE
    if same_improving or same_worsening:
        return MatchCategory.HALF
    if detected.swapped() == reference:
        return MatchCategory.HALF
    return MatchCategory.NONE


def top_k(d: TrialDistribution, k: int) -> list[tuple[Contradiction, float]]:
    """Top k contradictions by proportion, descending.

    Ties break by ascending (improving, worsening).  Proportions are over
    counted trials, so they sum to 1 when k covers every outcome.
    """
    if k < 1:
        raise ValueError("k must be >= 1")
    total = d.n_counted
    if total < 1:
        raise EmptyDistribution("top_k needs at least one counted trial")
    ranked = sorted(d.counts.items(), key=lambda item: (-item[1], item[0].as_tuple()))
    return [(c, n / total) for c, n in ranked[:k]]


@dataclass(frozen=True)
class CaseEvaluation:
    case_id: str
    entropy_bits: float
    top: list[tuple[Contradiction, float, MatchCategory]]
    best: MatchCategory
    n_counted: int
    failures: int


def evaluate_case(case, d: TrialDistribution, k: int) -> CaseEvaluation:
    """Entropy, top-k detections, and their match categories for one case."""
    h = entropy(d)
    entries = []
    for c, proportion in top_k(d, k):
        entries.append((c, proportion, categorize_match(c, case.reference_contradiction)))
    best = max((m for _, _, m in entries), key=_RANK.__getitem__,
               default=MatchCategory.NONE)
    return CaseEvaluation(case_id=case.id, entropy_bits=h, top=entries, best=best,
                          n_counted=d.n_counted, failures=d.failures)
