import json

import pytest

from triz_engine.errors import (
    DomainError,
    InvariantViolation,
    MissingPrincipleCoverage,
    PipelineError,
)
from triz_engine.gateway import ChatMessage
from triz_engine.kb import Contradiction
from triz_engine.pipeline import (
    PipelineOverrides,
    ProblemInput,
    prompt_checksums,
    run_pipeline,
    run_trials,
)
from triz_engine.pipeline.runner import (
    distill_problem,
    generate_solutions,
    identify_contradiction,
)
from triz_engine.pipeline import prompts

from conftest import make_replay_gateway

# sha256 of the shipped instruction files; drift in any prompt fails here
PINNED_CHECKSUMS = {
    "system": "0e4727163dc8c706304e5f60c8d165657f38c377e6ec91e85cdac33029382d7c",
    "module1": "efdefefbf876d7e6c9a988b0d69f1b9a393b0fb32a19575eab66e2a5993813a1",
    "module2": "bdbfd0635a85f0f63b84fd60d10f86da15678bb7f45b7f0b797a2d2bd8539ca8",
    "module3": "b5b1df83274c63cbf1e152ae57d12942eed780dfafeebd8cb496ba7793a93644",
    "module4": "0c565367b1556f6e78f784912f26e12f6f196279f0d2dc88862fccc5de8324b7",
    "module5": "9dc004090c89941eec7d7a672da88842dd6a4d161a67bd220afe39e25a97f77a",
}


class TestPromptAssets:
    def test_checksums_pinned(self):
        assert prompt_checksums() == PINNED_CHECKSUMS

    def test_identify_context_carries_all_parameters(self, kb):
        request = prompts.compose_identify("some problem", kb)
        context = request.messages[1].content
        for index in range(1, 40):
            assert f"[INDEX] {index} [TITLE]" in context

    def test_generate_context_carries_only_selected(self, kb):
        request = prompts.compose_generate(
            "p", Contradiction(6, 13), [kb.principle(2), kb.principle(39)], kb)
        context = request.messages[1].content
        assert "[INDEX] 2 [TITLE] Extraction" in context
        assert "[INDEX] 39 [TITLE] Strong Oxidants" in context
        assert "[INDEX] 1 [TITLE] Segmentation" not in context

    def test_first_message_is_system(self, kb):
        for request in (prompts.compose_distill("x"),
                        prompts.compose_identify("x", kb)):
            assert request.messages[0].role == "system"


class TestStages:
    def test_distill_case7_replay(self, replay_gateway, case_texts):
        problem = distill_problem(replay_gateway, ProblemInput(case_texts["case7"]))
        assert "elbow" in problem.text.lower()
        assert len(problem.text) <= 2 * len(case_texts["case7"])

    def test_distill_whitespace_input_precondition(self, replay_gateway):
        with pytest.raises(InvariantViolation):
            ProblemInput("   \n\t ")

    def test_distill_blank_model_reply(self, transcript_writer):
        from triz_engine.errors import EmptyDistillation
        directory, add = transcript_writer
        request = prompts.compose_distill("some problem")
        add(request, "   \n")
        gateway = make_replay_gateway(directory)
        with pytest.raises(EmptyDistillation):
            distill_problem(gateway, ProblemInput("some problem"))

    def test_distill_concise_statement_round_trip(self, transcript_writer):
        directory, add = transcript_writer
        statement = "Reduce drone drag without shrinking battery capacity."
        add(prompts.compose_distill(statement), statement)
        gateway = make_replay_gateway(directory)
        problem = distill_problem(gateway, ProblemInput(statement))
        assert problem.text == statement

    def test_identify_btms_replay(self, replay_gateway, kb, case_texts):
        problem = distill_problem(replay_gateway, ProblemInput(case_texts["btms"]))
        contradiction = identify_contradiction(replay_gateway, problem, kb)
        assert contradiction == Contradiction(12, 22)

    def test_identify_equal_roles_is_domain_error(self, transcript_writer, kb):
        from triz_engine.pipeline.report import ProblemDescription
        directory, add = transcript_writer
        problem = ProblemDescription(text="p")
        add(prompts.compose_identify("p", kb),
            json.dumps({"improving": 9, "worsening": 9}))
        gateway = make_replay_gateway(directory)
        with pytest.raises(DomainError):
            identify_contradiction(gateway, problem, kb)

    def test_generate_empty_principles_precondition(self, replay_gateway, kb):
        from triz_engine.pipeline.report import ProblemDescription
        with pytest.raises(InvariantViolation):
            generate_solutions(replay_gateway, ProblemDescription(text="p"),
                               None, [], kb)

    def test_generate_missing_coverage(self, transcript_writer, kb):
        from triz_engine.pipeline.report import ProblemDescription
        directory, add = transcript_writer
        principles = [kb.principle(2), kb.principle(39)]
        request = prompts.compose_generate("p", None, principles, kb)
        add(request, json.dumps({"solutions": [
            {"principle_index": 2, "title": "t", "body": "b"}]}))
        gateway = make_replay_gateway(directory)
        with pytest.raises(MissingPrincipleCoverage):
            generate_solutions(gateway, ProblemDescription(text="p"),
                               None, principles, kb)


class TestRunPipeline:
    def test_case7_full_run(self, replay_gateway, kb, case_texts):
        report = run_pipeline(replay_gateway, ProblemInput(case_texts["case7"]), kb)
        assert report.contradiction == Contradiction(6, 13)
        assert [p.index for p in report.principles] == [2, 39]
        assert len(report.solutions) == 2
        assert {s.principle_index for s in report.solutions} == {2, 39}
        assert [t.stage for t in report.trace] == [
            "distill", "identify", "generate", "summarize"]
        assert report.overrides_applied == set()

    def test_contradiction_override_skips_identify(self, replay_gateway, kb,
                                                   case_texts):
        ov = PipelineOverrides(contradiction=Contradiction(6, 22))
        report = run_pipeline(replay_gateway, ProblemInput(case_texts["btms"]),
                              kb, ov)
        assert report.overrides_applied == {"contradiction"}
        assert "identify" not in [t.stage for t in report.trace]
        assert {7, 17} <= {p.index for p in report.principles}
        assert {s.principle_index for s in report.solutions} \
            == {p.index for p in report.principles}

    def test_principles_override_guides_generation(self, replay_gateway, kb,
                                                   case_texts):
        ov = PipelineOverrides(principles=[35])
        report = run_pipeline(replay_gateway, ProblemInput(case_texts["btms"]),
                              kb, ov)
        assert report.overrides_applied == {"principles"}
        assert [p.index for p in report.principles] == [35]
        assert {s.principle_index for s in report.solutions} == {35}
        # contradiction was model-found, not user-supplied
        assert "contradiction" not in report.overrides_applied
        assert report.contradiction == Contradiction(12, 22)

    def test_replay_determinism_modulo_identity(self, replay_gateway, kb,
                                                case_texts):
        a = run_pipeline(replay_gateway, ProblemInput(case_texts["case7"]), kb)
        b = run_pipeline(replay_gateway, ProblemInput(case_texts["case7"]), kb)
        assert a.id != b.id
        assert a.problem == b.problem
        assert a.contradiction == b.contradiction
        assert a.principles == b.principles
        assert a.solutions == b.solutions
        assert [t.stage for t in a.trace] == [t.stage for t in b.trace]

    def test_failed_run_carries_partial_trace(self, transcript_writer, kb):
        directory, add = transcript_writer
        statement = "A problem that will fail at identify."
        add(prompts.compose_distill(statement), "distilled fine")
        gateway = make_replay_gateway(directory)
        with pytest.raises(PipelineError) as exc:
            run_pipeline(gateway, ProblemInput(statement), kb)
        failed = exc.value.failed_run
        assert failed is not None
        assert failed.stage == "identify"
        assert [t.stage for t in failed.trace] == ["distill"]

    def test_solution_provenance_invariant(self, replay_gateway, kb, case_texts):
        report = run_pipeline(replay_gateway, ProblemInput(case_texts["case7"]), kb)
        supplied = {p.index for p in report.principles}
        for solution in report.solutions:
            assert solution.principle_index in supplied


class TestStageSkipSoundness:
    class CountingGateway:
        """Scripted stand-in: counts completions, no transcripts, no network."""

        def __init__(self, responses):
            from triz_engine.gateway import ProviderConfig
            self.cfg = ProviderConfig(mode="live")
            self.responses = list(responses)
            self.calls = 0

        def complete(self, req):
            self.calls += 1
            return self.responses.pop(0)

    def test_all_three_overrides_only_generate_and_summarize(self, kb):
        gateway = self.CountingGateway([
            json.dumps({"solutions": [
                {"principle_index": 1, "title": "t", "body": "b"}]}),
            json.dumps({"problem": "p", "contradiction": "c",
                        "solutions": [{"principle_index": 1, "summary": "s"}]}),
        ])
        ov = PipelineOverrides(problem="Short problem.",
                               contradiction=Contradiction(1, 9),
                               principles=[1])
        report = run_pipeline(gateway, ProblemInput("raw input text"), kb, ov)
        assert gateway.calls == 2
        assert [t.stage for t in report.trace] == ["generate", "summarize"]
        assert report.overrides_applied == {"problem", "contradiction",
                                            "principles"}

    def test_no_summarize_means_single_call(self, kb):
        gateway = self.CountingGateway([
            json.dumps({"solutions": [
                {"principle_index": 1, "title": "t", "body": "b"}]}),
        ])
        ov = PipelineOverrides(problem="Short problem.",
                               contradiction=Contradiction(1, 9),
                               principles=[1])
        report = run_pipeline(gateway, ProblemInput("raw"), kb, ov,
                              summarize=False)
        assert gateway.calls == 1
        assert report.summary is None


class TestNetworkIsolation:
    def test_only_the_gateway_touches_the_network(self):
        # static check over the package source: network client imports stay
        # inside the gateway provider
        from pathlib import Path
        import triz_engine
        root = Path(triz_engine.__file__).parent
        offenders = []
        for path in root.rglob("*.py"):
            text = path.read_text()
            if "import httpx" in text or "import requests" in text \
                    or "import urllib" in text or "import socket" in text:
                offenders.append(str(path.relative_to(root)))
        assert offenders == ["gateway/provider.py"]


class TestRunTrials:
    def test_btms_trials_top2(self, replay_gateway, kb, case_texts):
        dist = run_trials(replay_gateway, ProblemInput(case_texts["btms"]), kb, 100)
        assert dist.n_counted + dist.failures == 100
        assert dist.failures == 0
        ranked = sorted(dist.counts.items(), key=lambda kv: -kv[1])
        assert ranked[0][0] == Contradiction(12, 22)
        assert ranked[1][0] == Contradiction(6, 22)

    def test_single_trial(self, replay_gateway, kb, case_texts):
        dist = run_trials(replay_gateway, ProblemInput(case_texts["btms"]), kb, 1)
        assert dist.n_counted == 1
        assert sum(dist.counts.values()) == 1

    def test_transcript_misses_become_failures(self, replay_gateway, kb,
                                               case_texts):
        dist = run_trials(replay_gateway, ProblemInput(case_texts["btms"]), kb, 103)
        assert dist.n_counted == 100
        assert dist.failures == 3
        assert dist.n_requested == 103

    def test_all_failures_raises(self, tmp_path, kb):
        gateway = make_replay_gateway(tmp_path)
        with pytest.raises(PipelineError):
            run_trials(gateway, ProblemInput("unrecorded problem"), kb, 3)

    def test_n_zero_rejected(self, replay_gateway, kb):
        with pytest.raises(InvariantViolation):
            run_trials(replay_gateway, ProblemInput("p"), kb, 0)
