"""Directory-backed document store: JSON files, atomic writes, per-doc locks."""

from __future__ import annotations

import json
import os
import threading
from pathlib import Path

from ..errors import NotFound


class DocumentStore:
    """Desk-scale persistence; every artifact is a diff-able file on disk."""

    def __init__(self, root: str | Path):
        self.root = Path(root)
        self.root.mkdir(parents=True, exist_ok=True)
        self._locks: dict[str, threading.Lock] = {}
        self._locks_guard = threading.Lock()

    def _lock_for(self, key: str) -> threading.Lock:
        with self._locks_guard:
            if key not in self._locks:
                self._locks[key] = threading.Lock()
            return self._locks[key]

    def path(self, collection: str, doc_id: str, suffix: str = ".json") -> Path:
        return self.root / collection / f"{doc_id}{suffix}"

    def write(self, collection: str, doc_id: str, payload: dict) -> Path:
        return self.write_text(collection, doc_id,
                               json.dumps(payload, indent=1, ensure_ascii=False) + "\n")

    def write_text(self, collection: str, doc_id: str, text: str,
                   suffix: str = ".json") -> Path:
        target = self.path(collection, doc_id, suffix)
        target.parent.mkdir(parents=True, exist_ok=True)
        with self._lock_for(str(target)):
            tmp = target.with_suffix(target.suffix + ".tmp")
            tmp.write_text(text)
            os.replace(tmp, target)
        return target

    def read(self, collection: str, doc_id: str) -> dict:
        target = self.path(collection, doc_id)
        if not target.is_file():
            raise NotFound(f"{collection}/{doc_id} not found")
        return json.loads(target.read_text())

    def read_text(self, collection: str, doc_id: str, suffix: str) -> str:
        target = self.path(collection, doc_id, suffix)
        if not target.is_file():
            raise NotFound(f"{collection}/{doc_id}{suffix} not found")
        return target.read_text()

    def ids(self, collection: str) -> list[str]:
        folder = self.root / collection
        if not folder.is_dir():
            return []
        return sorted(p.stem for p in folder.glob("*.json"))
