"""Chat message and request types used by every LLM-driven module."""

from __future__ import annotations

from dataclasses import dataclass, field

ROLES = ("system", "assistant", "user")


@dataclass(frozen=True)
class ChatMessage:
    role: str
    content: str

    def __post_init__(self):
        if self.role not in ROLES:
            raise ValueError(f"role must be one of {ROLES}, got {self.role!r}")
        if not self.content:
            raise ValueError("message content must be non-empty")


@dataclass(frozen=True)
class GenerationRequest:
    messages: tuple[ChatMessage, ...]
    temperature: float = 1.0
    max_output: int = 4096
    seed: int | None = None

    def __post_init__(self):
        object.__setattr__(self, "messages", tuple(self.messages))
        if self.temperature < 0:
            raise ValueError("temperature must be >= 0")
        if self.max_output <= 0:
            raise ValueError("max_output must be positive")

    def with_extra_message(self, message: ChatMessage) -> "GenerationRequest":
        return GenerationRequest(messages=self.messages + (message,),
                                 temperature=self.temperature,
                                 max_output=self.max_output, seed=self.seed)
