import json

import pytest
from click.testing import CliRunner

from triz_engine.cli import main

from conftest import TRANSCRIPTS_DIR


@pytest.fixture
def runner():
    return CliRunner()


@pytest.fixture
def replay_cli_env(monkeypatch):
    monkeypatch.setenv("TRIZ_ENGINE_LLM_MODE", "replay")
    monkeypatch.setenv("TRIZ_ENGINE_TRANSCRIPT_DIR", str(TRANSCRIPTS_DIR))
    monkeypatch.delenv("TRIZ_ENGINE_LLM_MODEL", raising=False)


class TestSolve:
    def test_solve_case7_markdown(self, runner, replay_cli_env, tmp_path,
                                  case_texts):
        source = tmp_path / "case7.txt"
        source.write_text(case_texts["case7"])
        out = tmp_path / "report.md"
        result = runner.invoke(main, ["solve", "--input", str(source),
                                      "--format", "md", "--output", str(out)])
        assert result.exit_code == 0, result.output
        document = out.read_text()
        assert "Extraction" in document
        assert "Strong Oxidants" in document

    def test_solve_json_mode_parseable(self, runner, replay_cli_env, case_texts):
        result = runner.invoke(main, ["solve", "--case", "case7", "--json"])
        assert result.exit_code == 0, result.output
        doc = json.loads(result.output)
        assert doc["contradiction"] == {"improving": 6, "worsening": 13}

    def test_solve_override_contradiction(self, runner, replay_cli_env,
                                          case_texts, tmp_path):
        source = tmp_path / "btms.txt"
        source.write_text(case_texts["btms"])
        result = runner.invoke(main, ["solve", "--input", str(source),
                                      "--override-contradiction", "6:22",
                                      "--json"])
        assert result.exit_code == 0, result.output
        doc = json.loads(result.output)
        assert doc["overrides_applied"] == ["contradiction"]
        assert {p["index"] for p in doc["principles"]} >= {7, 17}

    def test_unreplayed_problem_is_domain_error(self, runner, replay_cli_env,
                                                tmp_path):
        source = tmp_path / "novel.txt"
        source.write_text("A brand new problem statement with no transcript.")
        result = runner.invoke(main, ["solve", "--input", str(source)])
        assert result.exit_code == 1
        assert "error:" in result.output

    def test_usage_error_exit_code(self, runner):
        result = runner.invoke(main, ["solve", "--format", "docx"])
        assert result.exit_code == 2


class TestTrials:
    def test_trials_json(self, runner, replay_cli_env):
        result = runner.invoke(main, ["trials", "--n", "100", "--case", "btms",
                                      "--json"])
        assert result.exit_code == 0, result.output
        doc = json.loads(result.output)
        assert doc["n_requested"] == 100
        assert doc["failures"] == 0
        top = doc["counts"][0]
        assert (top["improving"], top["worsening"]) == (12, 22)

    def test_trials_needs_source(self, runner, replay_cli_env):
        result = runner.invoke(main, ["trials", "--n", "5"])
        assert result.exit_code == 2


class TestEvaluate:
    def test_evaluate_btms(self, runner, replay_cli_env, tmp_path):
        result = runner.invoke(main, ["evaluate", "--case", "btms", "--n", "100",
                                      "--k", "3", "--out", str(tmp_path),
                                      "--json"])
        assert result.exit_code == 0, result.output
        assert (tmp_path / "btms.json").is_file()
        assert (tmp_path / "btms.csv").is_file()


class TestKb:
    def test_validate_shipped_bundle(self, runner):
        result = runner.invoke(main, ["kb", "validate", "--json"])
        assert result.exit_code == 0, result.output
        assert json.loads(result.output) == {"violations": []}

    def test_validate_broken_bundle(self, runner, tmp_path, kb):
        from triz_engine.kb import save_knowledge_base
        save_knowledge_base(kb, tmp_path)
        params = json.loads((tmp_path / "parameters.json").read_text())
        (tmp_path / "parameters.json").write_text(json.dumps(params[:-1]))
        result = runner.invoke(main, ["kb", "validate", "--bundle", str(tmp_path)])
        assert result.exit_code == 1

    def test_lookup(self, runner):
        result = runner.invoke(main, ["kb", "lookup", "6", "13", "--json"])
        assert result.exit_code == 0
        assert [p["index"] for p in json.loads(result.output)] == [2, 39]

    def test_lookup_out_of_range(self, runner):
        result = runner.invoke(main, ["kb", "lookup", "40", "3"])
        assert result.exit_code == 1
        assert "Index out of range" in result.output


class TestReportRender:
    def test_render_from_doc(self, runner, replay_cli_env, tmp_path, case_texts):
        source = tmp_path / "case7.txt"
        source.write_text(case_texts["case7"])
        doc_path = tmp_path / "report.json"
        result = runner.invoke(main, ["solve", "--input", str(source),
                                      "--format", "json", "--output",
                                      str(doc_path)])
        assert result.exit_code == 0, result.output
        rendered = runner.invoke(main, ["report", "render", "--report",
                                        str(doc_path), "--format", "tex"])
        assert rendered.exit_code == 0, rendered.output
        assert rendered.output.startswith("\\documentclass")


class TestBtms:
    def test_metrics_fhp_row(self, runner):
        result = runner.invoke(main, ["btms", "metrics", "--v-batt", "0.39",
                                      "--v-module", "0.91", "--e-batt", "187.5",
                                      "--json"])
        assert result.exit_code == 0, result.output
        doc = json.loads(result.output)
        assert doc["e_g_percent"] == 43
        assert abs(doc["se_v_wh_per_l"] - 206.0) < 0.5

    def test_simulate_json(self, runner):
        result = runner.invoke(main, ["btms", "simulate", "--c-rate", "2",
                                      "--theta", "30", "--duration", "60",
                                      "--json"])
        assert result.exit_code == 0, result.output
        doc = json.loads(result.output)
        assert doc["final_max_temp_c"] > 19.0

    def test_sweep_csv(self, runner, tmp_path):
        out = tmp_path / "sweep.csv"
        result = runner.invoke(main, ["btms", "sweep", "--thetas", "15,30",
                                      "--c-rates", "1,2", "--duration", "60",
                                      "--csv", str(out)])
        assert result.exit_code == 0, result.output
        lines = out.read_text().strip().splitlines()
        assert len(lines) == 5  # header + 4 grid rows

    def test_simulate_from_spec_file(self, runner):
        from importlib import resources
        spec_path = str(resources.files("triz_engine.btms") / "fhp_module.json")
        result = runner.invoke(main, ["btms", "simulate", "--spec", spec_path,
                                      "--c-rate", "1", "--duration", "60",
                                      "--json"])
        assert result.exit_code == 0, result.output
        doc = json.loads(result.output)
        assert doc["theta_deg"] == 20.0
