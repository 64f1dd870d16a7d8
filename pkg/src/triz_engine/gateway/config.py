"""Provider configuration, resolvable from TRIZ_ENGINE_* environment variables."""

from __future__ import annotations

import os
from dataclasses import dataclass

ENV_ENDPOINT = "TRIZ_ENGINE_LLM_ENDPOINT"
ENV_MODEL = "TRIZ_ENGINE_LLM_MODEL"
ENV_KEY = "TRIZ_ENGINE_LLM_KEY"
ENV_MODE = "TRIZ_ENGINE_LLM_MODE"
ENV_TRANSCRIPT_DIR = "TRIZ_ENGINE_TRANSCRIPT_DIR"

MODES = ("live", "record", "replay")


@dataclass(frozen=True)
class ProviderConfig:
    endpoint: str = "https://api.openai.com/v1/chat/completions"
    model_id: str = "gpt-4"
    credential: str = ENV_KEY  # name of the env var holding the API key
    timeout: float = 60.0
    max_retries: int = 2
    concurrency_cap: int = 4
    mode: str = "live"
    transcript_dir: str | None = None

    def __post_init__(self):
        if self.timeout <= 0:
            raise ValueError("timeout must be positive")
        if self.max_retries < 0:
            raise ValueError("max_retries must be >= 0")
        if self.concurrency_cap < 1:
            raise ValueError("concurrency_cap must be >= 1")
        if self.mode not in MODES:
            raise ValueError(f"mode must be one of {MODES}, got {self.mode!r}")

    @classmethod
    def from_env(cls, **overrides) -> "ProviderConfig":
        values = dict(
            endpoint=os.environ.get(ENV_ENDPOINT, cls.endpoint),
            model_id=os.environ.get(ENV_MODEL, cls.model_id),
            mode=os.environ.get(ENV_MODE, "live"),
            transcript_dir=os.environ.get(ENV_TRANSCRIPT_DIR),
        )
        values.update(overrides)
        return cls(**values)

    def resolve_credential(self) -> str:
        value = os.environ.get(self.credential, "")
        if not value:
            from ..errors import AuthError
            raise AuthError(f"credential environment variable {self.credential} is not set")
        return value
