"""Append-only JSON-lines transcripts keyed by request digest.

A transcript directory holds *.jsonl files whose lines are
{"digest": ..., "request": ..., "response": ...}.  Replay loads every file
in the directory into one digest -> response map; record appends to a
single session file.  The digest is a pure function of
(model_id, messages, temperature, seed), so identical requests hit the
same entry.
"""

from __future__ import annotations

import hashlib
import json
import threading
from pathlib import Path

from ..errors import TranscriptMiss
from .messages import GenerationRequest

SESSION_FILE = "session.jsonl"


def request_digest(model_id: str, req: GenerationRequest) -> str:
    payload = {
        "model": model_id,
        "messages": [[m.role, m.content] for m in req.messages],
        "temperature": req.temperature,
        "seed": req.seed,
    }
    canonical = json.dumps(payload, sort_keys=True, separators=(",", ":"), ensure_ascii=False)
    return hashlib.sha256(canonical.encode("utf-8")).hexdigest()


class TranscriptStore:
    """Single-writer append, lock-free replay lookups after load."""

    def __init__(self, directory: str | Path):
        self.directory = Path(directory)
        self._lock = threading.Lock()
        self._entries: dict[str, str] | None = None

    def _load(self) -> dict[str, str]:
        if self._entries is None:
            entries: dict[str, str] = {}
            if self.directory.is_dir():
                for path in sorted(self.directory.glob("*.jsonl")):
                    for line in path.read_text().splitlines():
                        if not line.strip():
                            continue
                        row = json.loads(line)
                        entries[row["digest"]] = row["response"]
            self._entries = entries
        return self._entries

    def lookup(self, digest: str) -> str:
        entries = self._load()
        if digest not in entries:
            raise TranscriptMiss(digest)
        return entries[digest]

    def append(self, digest: str, req: GenerationRequest, response: str,
               model_id: str) -> None:
        row = {
            "digest": digest,
            "request": {
                "model": model_id,
                "messages": [{"role": m.role, "content": m.content} for m in req.messages],
                "temperature": req.temperature,
                "seed": req.seed,
            },
            "response": response,
        }
        line = json.dumps(row, ensure_ascii=False)
        with self._lock:
            self.directory.mkdir(parents=True, exist_ok=True)
            with open(self.directory / SESSION_FILE, "a", encoding="utf-8") as fh:
                fh.write(line + "\n")
            if self._entries is not None:
                self._entries[digest] = response
