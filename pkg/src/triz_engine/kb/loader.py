"""Load, validate, and save the TRIZ knowledge-base bundle.

Bundle layout (one directory): parameters.json and principles.json are
arrays of {index, title, description}; matrix.json is an array of
{improving, worsening, principles: [int]} where an absent pair means an
empty cell.
"""

from __future__ import annotations

import json
from importlib import resources
from pathlib import Path

from ..errors import InvariantViolation, MissingFile, SchemaViolation
from .models import (
    N_PARAMETERS,
    N_PRINCIPLES,
    ContradictionMatrix,
    EngineeringParameter,
    InventivePrinciple,
    KnowledgeBase,
)

BUNDLE_FILES = ("parameters.json", "principles.json", "matrix.json")


def default_bundle_path() -> Path:
    """Path of the bundle shipped inside the package."""
    return Path(resources.files("triz_engine.kb") / "data")


def _read_json(path: Path):
    if not path.is_file():
        raise MissingFile(f"knowledge base file not found: {path}")
    try:
        return json.loads(path.read_text())
    except json.JSONDecodeError as exc:
        raise SchemaViolation(f"{path.name}: not valid JSON ({exc})") from exc


def _parse_entries(doc, cls, filename: str):
    if not isinstance(doc, list):
        raise SchemaViolation(f"{filename}: expected a JSON array")
    entries = []
    for pos, raw in enumerate(doc):
        if not isinstance(raw, dict):
            raise SchemaViolation(f"{filename}[{pos}]: expected an object")
        try:
            entries.append(cls(index=int(raw["index"]), title=str(raw["title"]),
                               description=str(raw["description"])))
        except (KeyError, TypeError, ValueError) as exc:
            raise SchemaViolation(f"{filename}[{pos}]: {exc!r}") from exc
    return tuple(entries)


def _parse_matrix(doc, filename: str) -> ContradictionMatrix:
    if not isinstance(doc, list):
        raise SchemaViolation(f"{filename}: expected a JSON array")
    cells: dict[tuple[int, int], tuple[int, ...]] = {}
    for pos, raw in enumerate(doc):
        try:
            key = (int(raw["improving"]), int(raw["worsening"]))
            plist = tuple(int(p) for p in raw["principles"])
        except (KeyError, TypeError, ValueError) as exc:
            raise SchemaViolation(f"{filename}[{pos}]: {exc!r}") from exc
        if key in cells:
            raise SchemaViolation(f"{filename}[{pos}]: duplicate cell {key}")
        cells[key] = plist
    return ContradictionMatrix(cells=cells)


def load_knowledge_base(source: str | Path | None = None) -> KnowledgeBase:
    """Load and validate a bundle; returns an immutable KnowledgeBase.

    With no source, loads the bundle shipped with the package.  Raises
    MissingFile, SchemaViolation, or InvariantViolation (naming the
    offending entry) when the bundle is absent or malformed.
    """
    root = Path(source) if source is not None else default_bundle_path()
    if not root.is_dir():
        raise MissingFile(f"knowledge base bundle directory not found: {root}")

    parameters = _parse_entries(_read_json(root / "parameters.json"),
                                EngineeringParameter, "parameters.json")
    principles = _parse_entries(_read_json(root / "principles.json"),
                                InventivePrinciple, "principles.json")
    matrix = _parse_matrix(_read_json(root / "matrix.json"), "matrix.json")

    kb = KnowledgeBase(parameters=parameters, principles=principles, matrix=matrix)
    problems = validate_knowledge_base(kb)
    if problems:
        raise InvariantViolation("; ".join(problems.violations))
    return kb


class ValidationReport:
    """List of invariant violations; empty iff the knowledge base is valid."""

    def __init__(self, violations: list[str]):
        self.violations = violations

    def __bool__(self) -> bool:
        return bool(self.violations)

    def __iter__(self):
        return iter(self.violations)

    def __len__(self) -> int:
        return len(self.violations)


def validate_knowledge_base(kb: KnowledgeBase) -> ValidationReport:
    """Check every type invariant; violations are data, not failures."""
    out: list[str] = []

    seen = {p.index for p in kb.parameters}
    for missing in sorted(set(range(1, N_PARAMETERS + 1)) - seen):
        out.append(f"parameters: missing index {missing}")
    for extra in sorted(seen - set(range(1, N_PARAMETERS + 1))):
        out.append(f"parameters: index {extra} outside 1..{N_PARAMETERS}")
    if len(kb.parameters) != len(seen):
        dupes = sorted({p.index for p in kb.parameters
                        if sum(q.index == p.index for q in kb.parameters) > 1})
        out.append(f"parameters: duplicate index {dupes}")
    for p in kb.parameters:
        if not p.title.strip() or not p.description.strip():
            out.append(f"parameters: index {p.index} has empty title or description")

    seen_pr = {p.index for p in kb.principles}
    for missing in sorted(set(range(1, N_PRINCIPLES + 1)) - seen_pr):
        out.append(f"principles: missing index {missing}")
    for extra in sorted(seen_pr - set(range(1, N_PRINCIPLES + 1))):
        out.append(f"principles: index {extra} outside 1..{N_PRINCIPLES}")
    if len(kb.principles) != len(seen_pr):
        dupes = sorted({p.index for p in kb.principles
                        if sum(q.index == p.index for q in kb.principles) > 1})
        out.append(f"principles: duplicate index {dupes}")
    for p in kb.principles:
        if not p.title.strip() or not p.description.strip():
            out.append(f"principles: index {p.index} has empty title or description")

    any_filled = False
    for (imp, wor), plist in sorted(kb.matrix.cells.items()):
        if not (1 <= imp <= N_PARAMETERS and 1 <= wor <= N_PARAMETERS):
            out.append(f"matrix: cell ({imp},{wor}) outside the 39x39 grid")
            continue
        if imp == wor and plist:
            out.append(f"matrix: diagonal cell ({imp},{wor}) must be empty")
        for p in plist:
            if not 1 <= p <= N_PRINCIPLES:
                out.append(f"matrix: cell ({imp},{wor}) references principle {p} "
                           f"outside 1..{N_PRINCIPLES}")
            elif p not in seen_pr:
                out.append(f"matrix: cell ({imp},{wor}) references unknown principle {p}")
        if plist and imp != wor:
            any_filled = True
    if not any_filled:
        out.append("matrix: no non-diagonal cell holds any principle")

    return ValidationReport(out)


def save_knowledge_base(kb: KnowledgeBase, dest: str | Path) -> None:
    """Write a bundle back to disk; load -> save -> load round-trips."""
    root = Path(dest)
    root.mkdir(parents=True, exist_ok=True)
    (root / "parameters.json").write_text(json.dumps(
        [{"index": p.index, "title": p.title, "description": p.description}
         for p in kb.parameters], indent=1) + "\n")
    (root / "principles.json").write_text(json.dumps(
        [{"index": p.index, "title": p.title, "description": p.description}
         for p in kb.principles], indent=1) + "\n")
    (root / "matrix.json").write_text(json.dumps(
        [{"improving": imp, "worsening": wor, "principles": list(plist)}
         for (imp, wor), plist in sorted(kb.matrix.cells.items())], indent=1) + "\n")
