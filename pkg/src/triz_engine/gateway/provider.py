"""Uniform chat-completion interface with live, record, and replay modes.

No module outside this package performs network I/O.  Live calls speak the
standard chat-completion HTTP+JSON dialect; transient failures retry with
exponential backoff up to max_retries.
"""

from __future__ import annotations

import logging
import threading
import time

import httpx

from ..errors import AuthError, GatewayError, RateLimited, Timeout
from .config import ProviderConfig
from .messages import GenerationRequest
from .transcript import TranscriptStore, request_digest

logger = logging.getLogger(__name__)

_BACKOFF_BASE = 0.5

_RETRYABLE_STATUS = {429, 500, 502, 503, 504}


class Gateway:
    """Shareable provider handle; enforces concurrency_cap as a semaphore."""

    def __init__(self, cfg: ProviderConfig):
        self.cfg = cfg
        self._semaphore = threading.BoundedSemaphore(cfg.concurrency_cap)
        self._store = TranscriptStore(cfg.transcript_dir) if cfg.transcript_dir else None
        if cfg.mode in ("record", "replay") and self._store is None:
            raise GatewayError(f"{cfg.mode} mode requires a transcript directory")

    def complete(self, req: GenerationRequest) -> str:
        """Return raw model text for the request.

        Replay resolves the request digest against the transcript; record
        performs the live call and appends the exchange.
        """
        digest = request_digest(self.cfg.model_id, req)
        if self.cfg.mode == "replay":
            return self._store.lookup(digest)

        text = self._complete_live(req)
        if self.cfg.mode == "record":
            self._store.append(digest, req, text, self.cfg.model_id)
        return text

    def _complete_live(self, req: GenerationRequest) -> str:
        key = self.cfg.resolve_credential()  # AuthError before any network call
        body = {
            "model": self.cfg.model_id,
            "messages": [{"role": m.role, "content": m.content} for m in req.messages],
            "temperature": req.temperature,
            "max_tokens": req.max_output,
        }
        if req.seed is not None:
            body["seed"] = req.seed

        attempts = self.cfg.max_retries + 1
        last_exc: Exception | None = None
        for attempt in range(attempts):
            if attempt:
                delay = _BACKOFF_BASE * (2 ** (attempt - 1))
                logger.info("retrying LLM call in %.1fs (attempt %d/%d)",
                            delay, attempt + 1, attempts)
                time.sleep(delay)
            try:
                with self._semaphore:
                    response = httpx.post(
                        self.cfg.endpoint,
                        json=body,
                        headers={"Authorization": f"Bearer {key}"},
                        timeout=self.cfg.timeout,
                    )
            except httpx.TimeoutException as exc:
                last_exc = Timeout(f"LLM call timed out after {self.cfg.timeout}s")
                last_exc.__cause__ = exc
                continue
            except httpx.HTTPError as exc:
                last_exc = GatewayError(f"transport failure: {exc}")
                continue

            if response.status_code in (401, 403):
                raise AuthError(f"provider rejected credentials ({response.status_code})")
            if response.status_code in _RETRYABLE_STATUS:
                last_exc = RateLimited(f"provider returned {response.status_code}")
                continue
            if response.status_code != 200:
                raise GatewayError(f"provider returned {response.status_code}: "
                                   f"{response.text[:500]}")
            try:
                return response.json()["choices"][0]["message"]["content"]
            except (KeyError, IndexError, ValueError) as exc:
                raise GatewayError(f"malformed provider response: {exc}") from exc

        raise last_exc if last_exc else GatewayError("LLM call failed")


def complete(cfg: ProviderConfig, req: GenerationRequest) -> str:
    return Gateway(cfg).complete(req)
