"""Pluggable LLM gateway with deterministic record/replay transcripts."""

from .config import (
    ENV_ENDPOINT,
    ENV_KEY,
    ENV_MODE,
    ENV_MODEL,
    ENV_TRANSCRIPT_DIR,
    ProviderConfig,
)
from .messages import ChatMessage, GenerationRequest
from .provider import Gateway, complete
from .structured import (
    FieldSpec,
    IntRange,
    ListOf,
    NonEmptyText,
    ObjectSpec,
    complete_structured,
    extract_json_object,
)
from .transcript import TranscriptStore, request_digest

__all__ = [
    "ChatMessage",
    "ENV_ENDPOINT",
    "ENV_KEY",
    "ENV_MODE",
    "ENV_MODEL",
    "ENV_TRANSCRIPT_DIR",
    "FieldSpec",
    "Gateway",
    "GenerationRequest",
    "IntRange",
    "ListOf",
    "NonEmptyText",
    "ObjectSpec",
    "ProviderConfig",
    "TranscriptStore",
    "complete",
    "complete_structured",
    "extract_json_object",
    "request_digest",
]
