import pytest

from triz_engine.errors import TranscriptMiss
from triz_engine.kb import Contradiction
from triz_engine.pipeline import ProblemInput, run_pipeline
from triz_engine.reporting import content_from_report_doc, latex_escape, render
from triz_engine.reporting.summarize import SummarizedContent, SummarizedSolution
from triz_engine.service.jobs import serialize_report

from conftest import make_replay_gateway


@pytest.fixture
def case7_report(replay_gateway, kb, case_texts):
    return run_pipeline(replay_gateway, ProblemInput(case_texts["case7"]), kb)


def minimal_content(kb, n_solutions=1) -> SummarizedContent:
    solutions = tuple(
        SummarizedSolution(principle_index=2, title=f"Fix {i}", summary=f"Do thing {i}.")
        for i in range(n_solutions))
    return SummarizedContent(
        report_id="r1", model_id="m", problem="The problem.",
        improving=kb.parameter(6), worsening=kb.parameter(13),
        contradiction=Contradiction(6, 13),
        contradiction_note="Area fights stability.",
        principles=(kb.principle(2),), solutions=solutions)


class TestSummarize:
    def test_case7_summary_sections(self, case7_report):
        summary = case7_report.summary
        assert summary is not None
        assert summary.problem
        assert summary.contradiction_note
        assert len(summary.solutions) == 2
        assert {s.principle_index for s in summary.solutions} == {2, 39}

    def test_solution_titles_come_from_record(self, case7_report):
        titles = {s.principle_index: s.title for s in case7_report.solutions}
        for s in case7_report.summary.solutions:
            assert s.title == titles[s.principle_index]

    def test_replay_miss_propagates(self, tmp_path, kb, case7_report):
        from triz_engine.reporting import summarize
        gateway = make_replay_gateway(tmp_path)
        with pytest.raises(TranscriptMiss):
            summarize(gateway, case7_report, kb)


class TestRender:
    def test_markdown_four_headings(self, kb):
        doc = render(minimal_content(kb), "markdown")
        headings = [line for line in doc.splitlines() if line.startswith("# ")]
        assert headings == ["# Problem", "# Identified Contradiction",
                            "# Inventive Principles", "# Solutions"]

    def test_render_is_pure(self, kb):
        content = minimal_content(kb, n_solutions=2)
        assert render(content, "markdown") == render(content, "markdown")
        assert render(content, "latex") == render(content, "latex")

    def test_one_solution_one_subsection(self, kb):
        doc = render(minimal_content(kb, n_solutions=1), "markdown")
        assert doc.count("## Solution") == 1

    def test_case7_latex_parameter_titles(self, case7_report, kb):
        doc = render(case7_report.summary, "latex")
        assert "Area of stationary object" in doc
        assert "Stability of the object's composition" in doc
        assert doc.startswith("\\documentclass")
        assert doc.rstrip().endswith("\\end{document}")
        assert doc.count(r"\begin{document}") == doc.count(r"\end{document}") == 1
        assert doc.count(r"\begin{itemize}") == doc.count(r"\end{itemize}")

    def test_latex_escaping(self):
        assert latex_escape("a_b & 5% {x}") == r"a\_b \& 5\% \{x\}"

    def test_principles_once_solutions_at_least_once(self, case7_report):
        doc = render(case7_report.summary, "markdown")
        principles_section = doc.split("# Inventive Principles")[1].split("# Solutions")[0]
        solutions_section = doc.split("# Solutions")[1]
        for p in case7_report.principles:
            assert principles_section.count(f"**{p.index}. {p.title}**") == 1
            assert f"(principle {p.index})" in solutions_section

    def test_unknown_format_rejected(self, kb):
        with pytest.raises(ValueError):
            render(minimal_content(kb), "pdf")


class TestReportDocRoundTrip:
    def test_render_from_persisted_doc_matches(self, case7_report, kb):
        doc = serialize_report(case7_report)
        content = content_from_report_doc(doc, kb)
        assert render(content, "markdown") == render(case7_report.summary, "markdown")
        assert render(content, "latex") == render(case7_report.summary, "latex")


class TestTemplateOverride:
    def test_user_template_layout(self, kb, tmp_path):
        (tmp_path / "report.md.tmpl").write_text(
            "PROBLEM FIRST\n{problem}\n\nTHEN SOLUTIONS\n{solutions}\n\n"
            "PRINCIPLES LAST\n{principles}\n")
        doc = render(minimal_content(kb, n_solutions=2), "markdown",
                     template_dir=tmp_path)
        assert doc.startswith("PROBLEM FIRST\nThe problem.")
        assert doc.index("THEN SOLUTIONS") < doc.index("PRINCIPLES LAST")
        assert "## Solution 2: Fix 1 (principle 2)" in doc

    def test_user_template_latex_blocks_escaped(self, kb, tmp_path):
        (tmp_path / "report.tex.tmpl").write_text(
            "\\documentclass{{article}}\\begin{{document}}\n{problem}\n"
            "{contradiction}\n{principles}\n{solutions}\n\\end{{document}}\n")
        content = minimal_content(kb)
        content = SummarizedContent(
            report_id=content.report_id, model_id=content.model_id,
            problem="50% better & cheaper", improving=content.improving,
            worsening=content.worsening, contradiction=content.contradiction,
            contradiction_note=content.contradiction_note,
            principles=content.principles, solutions=content.solutions)
        doc = render(content, "latex", template_dir=tmp_path)
        assert r"50\% better \& cheaper" in doc

    def test_override_is_deterministic(self, kb, tmp_path):
        (tmp_path / "report.md.tmpl").write_text("{problem}|{contradiction}")
        content = minimal_content(kb)
        assert render(content, "markdown", template_dir=tmp_path) \
            == render(content, "markdown", template_dir=tmp_path)
