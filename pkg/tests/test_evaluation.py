import itertools
import json
import math

import pytest
from hypothesis import given
from hypothesis import strategies as st

from triz_engine.errors import DuplicateId, EmptyDistribution, SchemaViolation
from triz_engine.evaluation import (
    CaseRecord,
    MatchCategory,
    TrialDistribution,
    categorize_match,
    entropy,
    evaluate_case,
    load_case_base,
    top_k,
    write_evaluation,
)
from triz_engine.kb import Contradiction


def dist(counts: dict, failures=0, n=None):
    mapped = {Contradiction(i, w): c for (i, w), c in counts.items()}
    total = sum(counts.values()) + failures
    return TrialDistribution(counts=mapped, failures=failures,
                             n_requested=n if n is not None else total)


class TestCaseBase:
    def test_shipped_base(self):
        cases = load_case_base()
        assert len(cases) >= 2
        ids = {c.id for c in cases}
        assert {"case7", "btms"} <= ids
        case7 = next(c for c in cases if c.id == "case7")
        assert case7.reference_contradiction == Contradiction(9, 13)
        assert case7.reference_principles == (28,)

    def test_missing_reference_contradiction(self, tmp_path):
        (tmp_path / "bad.json").write_text(json.dumps({
            "id": "bad", "problem_statement": "p", "reference_principles": [1]}))
        with pytest.raises(SchemaViolation):
            load_case_base(tmp_path)

    def test_duplicate_ids(self, tmp_path):
        body = {"id": "case7", "problem_statement": "p",
                "reference_contradiction": {"improving": 1, "worsening": 2},
                "reference_principles": [1]}
        (tmp_path / "a.json").write_text(json.dumps(body))
        (tmp_path / "b.json").write_text(json.dumps(body))
        with pytest.raises(DuplicateId):
            load_case_base(tmp_path)


class TestEntropy:
    def test_uniform_100_distinct(self):
        counts = {(1 + i % 39, 1 + (i + 1) % 39): 1 for i in range(0, 0)}
        # build 100 distinct contradictions: (i, w) pairs i != w
        pairs = [(i, w) for i in range(1, 39) for w in range(1, 39) if i != w][:100]
        d = dist({p: 1 for p in pairs})
        assert entropy(d) == pytest.approx(6.643856189774724, abs=0.01)

    def test_single_outcome(self):
        assert entropy(dist({(12, 22): 100})) == 0.0

    def test_60_40_oracle(self):
        # hand evaluation of -sum p log2 p with p = .6/.4
        assert entropy(dist({(12, 22): 60, (6, 22): 40})) \
            == pytest.approx(0.9709505944546686, abs=1e-3)

    def test_empty_distribution(self):
        with pytest.raises(EmptyDistribution):
            entropy(TrialDistribution(counts={}, failures=3, n_requested=3))

    def test_failures_excluded_from_probabilities(self):
        with_failures = dist({(1, 2): 60, (2, 1): 40}, failures=50, n=150)
        without = dist({(1, 2): 60, (2, 1): 40})
        assert entropy(with_failures) == entropy(without)

    @given(st.lists(st.integers(1, 50), min_size=1, max_size=6))
    def test_permutation_invariant_and_bounded(self, counts):
        pairs = [(1 + i, 2 + i) for i in range(len(counts))]
        d1 = dist(dict(zip(pairs, counts)))
        d2 = dist(dict(zip(pairs, reversed(counts))))
        h1, h2 = entropy(d1), entropy(d2)
        assert h1 == pytest.approx(h2, abs=1e-12)
        assert -1e-12 <= h1 <= math.log2(len(counts)) + 1e-12

    def test_maximal_exactly_at_uniform_bruteforce(self):
        # all compositions of n <= 8 into <= 4 bins
        for n in range(2, 9):
            for bins in range(2, 5):
                compositions = [c for c in itertools.product(range(1, n + 1),
                                                             repeat=bins)
                                if sum(c) == n]
                if not compositions:
                    continue
                pairs = [(1 + i, 2 + i) for i in range(bins)]
                best = max(compositions,
                           key=lambda c: entropy(dist(dict(zip(pairs, c)))))
                if n % bins == 0:
                    assert set(best) == {n // bins}, (n, bins, best)
                h_max = entropy(dist(dict(zip(pairs, best))))
                assert h_max <= math.log2(bins) + 1e-12


class TestCategorizeMatch:
    def test_truth_table(self):
        ref = Contradiction(9, 13)
        assert categorize_match(Contradiction(9, 13), ref) is MatchCategory.COMPLETE
        assert categorize_match(Contradiction(6, 13), ref) is MatchCategory.HALF
        assert categorize_match(Contradiction(9, 12), ref) is MatchCategory.HALF
        assert categorize_match(Contradiction(13, 9), ref) is MatchCategory.HALF
        assert categorize_match(Contradiction(1, 2), Contradiction(3, 4)) \
            is MatchCategory.NONE

    def test_identity_always_complete(self):
        for i in range(1, 7):
            for w in range(1, 7):
                if i == w:
                    continue
                c = Contradiction(i, w)
                assert categorize_match(c, c) is MatchCategory.COMPLETE

    def test_symmetry_exhaustive_small_grid(self):
        pairs = [Contradiction(i, w)
                 for i in range(1, 7) for w in range(1, 7) if i != w]
        for a in pairs:
            for b in pairs:
                assert categorize_match(a, b) is categorize_match(b, a)

    def test_swap_never_complete(self):
        # exhaustive: role-swapped pairs can match fully only when equal,
        # which the type forbids
        pairs = [Contradiction(i, w)
                 for i in range(1, 7) for w in range(1, 7) if i != w]
        for a in pairs:
            assert categorize_match(a, a.swapped()) is MatchCategory.HALF


class TestTopK:
    def test_figure_ordering(self):
        d = dist({(12, 22): 40, (6, 22): 25, (9, 22): 10,
                  (1, 2): 9, (2, 3): 8, (3, 4): 8})
        top = top_k(d, 3)
        assert [c.as_tuple() for c, _ in top] == [(12, 22), (6, 22), (9, 22)]
        assert [p for _, p in top] == [0.40, 0.25, 0.10]

    def test_k_larger_than_distinct(self):
        d = dist({(1, 2): 1, (2, 3): 1})
        top = top_k(d, 10)
        assert len(top) == 2
        assert sum(p for _, p in top) == pytest.approx(1.0)

    def test_tie_broken_by_ascending_indexes(self):
        d = dist({(5, 6): 30, (1, 9): 30, (1, 2): 40})
        top = top_k(d, 3)
        assert [c.as_tuple() for c, _ in top] == [(1, 2), (1, 9), (5, 6)]

    def test_proportions_sum_bounded(self):
        d = dist({(1, 2): 50, (2, 3): 30, (3, 4): 20})
        assert sum(p for _, p in top_k(d, 2)) <= 1.0
        assert sum(p for _, p in top_k(d, 3)) == pytest.approx(1.0)


class TestEvaluateCase:
    CASE = CaseRecord(id="c", domain="d", problem_statement="p",
                      reference_contradiction=Contradiction(9, 13),
                      reference_principles=(28,), reference_solution="s",
                      source="src")

    def test_half_match_dominant(self):
        d = dist({(6, 13): 60, (5, 13): 30, (1, 2): 10})
        ev = evaluate_case(self.CASE, d, 3)
        assert ev.best is MatchCategory.HALF
        assert all(m in (MatchCategory.HALF, MatchCategory.NONE)
                   for _, _, m in ev.top)

    def test_reference_only_distribution(self):
        d = dist({(9, 13): 10})
        ev = evaluate_case(self.CASE, d, 3)
        assert ev.best is MatchCategory.COMPLETE
        assert ev.entropy_bits == 0.0

    def test_disjoint_distribution(self):
        d = dist({(1, 2): 5, (2, 3): 5})
        ev = evaluate_case(self.CASE, d, 3)
        assert ev.best is MatchCategory.NONE

    def test_write_evaluation_outputs(self, tmp_path):
        d = dist({(9, 13): 6, (6, 13): 4})
        ev = evaluate_case(self.CASE, d, 2)
        json_path, csv_path = write_evaluation(tmp_path, ev, d)
        doc = json.loads(json_path.read_text())
        assert doc["case_id"] == "c"
        assert doc["best_match"] == "complete"
        lines = csv_path.read_text().strip().splitlines()
        assert lines[0] == "improving,worsening,count,proportion,match"
        assert len(lines) == 3
