import json
from pathlib import Path

import pytest

from triz_engine.gateway import Gateway, GenerationRequest, ProviderConfig, TranscriptStore, request_digest
from triz_engine.kb import load_knowledge_base

TESTS_DIR = Path(__file__).parent
TRANSCRIPTS_DIR = TESTS_DIR / "data" / "transcripts"


@pytest.fixture(scope="session")
def kb():
    return load_knowledge_base()


@pytest.fixture(scope="session")
def case_texts():
    cases_dir = Path(__file__).parents[1] / "src/triz_engine/evaluation/cases"
    return {
        "case7": json.loads((cases_dir / "case7.json").read_text())["problem_statement"],
        "btms": json.loads((cases_dir / "btms.json").read_text())["problem_statement"],
    }


@pytest.fixture
def replay_gateway():
    cfg = ProviderConfig(mode="replay", transcript_dir=str(TRANSCRIPTS_DIR))
    return Gateway(cfg)


@pytest.fixture
def replay_env(monkeypatch):
    """Environment for components that build their own gateway from env."""
    monkeypatch.setenv("TRIZ_ENGINE_LLM_MODE", "replay")
    monkeypatch.setenv("TRIZ_ENGINE_TRANSCRIPT_DIR", str(TRANSCRIPTS_DIR))
    monkeypatch.delenv("TRIZ_ENGINE_LLM_MODEL", raising=False)
    monkeypatch.delenv("TRIZ_ENGINE_LLM_KEY", raising=False)


@pytest.fixture
def transcript_writer(tmp_path):
    """Record ad-hoc exchanges into a temp transcript dir; returns (dir, add)."""
    store = TranscriptStore(tmp_path)

    def add(req: GenerationRequest, response: str, model_id: str = "gpt-4"):
        store.append(request_digest(model_id, req), req, response, model_id)

    return tmp_path, add


def make_replay_gateway(directory, **cfg_overrides) -> Gateway:
    cfg = ProviderConfig(mode="replay", transcript_dir=str(directory), **cfg_overrides)
    return Gateway(cfg)
