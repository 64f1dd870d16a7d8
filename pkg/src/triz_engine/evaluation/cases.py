"""Case base: expert-analyzed problems stored one JSON document per case."""

from __future__ import annotations

import csv
import json
from dataclasses import dataclass
from importlib import resources
from pathlib import Path

from ..errors import DuplicateId, MissingFile, SchemaViolation
from ..kb import Contradiction
from .stats import CaseEvaluation


@dataclass(frozen=True)
class CaseRecord:
    id: str
    domain: str
    problem_statement: str
    reference_contradiction: Contradiction
    reference_principles: tuple[int, ...]
    reference_solution: str
    source: str

    def __post_init__(self):
        if not self.problem_statement.strip():
            raise SchemaViolation(f"case {self.id!r}: empty problem statement")
        for p in self.reference_principles:
            if not 1 <= p <= 40:
                raise SchemaViolation(
                    f"case {self.id!r}: reference principle {p} outside 1..40")


def default_case_dir() -> Path:
    return Path(resources.files("triz_engine.evaluation") / "cases")


def _parse_case(raw: dict, origin: str) -> CaseRecord:
    try:
        ref = raw["reference_contradiction"]
        contradiction = Contradiction(int(ref["improving"]), int(ref["worsening"]))
        return CaseRecord(
            id=str(raw["id"]),
            domain=str(raw.get("domain", "")),
            problem_statement=str(raw["problem_statement"]),
            reference_contradiction=contradiction,
            reference_principles=tuple(int(p) for p in raw["reference_principles"]),
            reference_solution=str(raw.get("reference_solution", "")),
            source=str(raw.get("source", "")),
        )
    except SchemaViolation:
        raise
    except Exception as exc:
        raise SchemaViolation(f"{origin}: {exc!r}") from exc


def load_case_base(path: str | Path | None = None) -> list[CaseRecord]:
    """Load every cases/<id>.json under the directory; duplicate ids reject."""
    root = Path(path) if path is not None else default_case_dir()
    if not root.is_dir():
        raise MissingFile(f"case directory not found: {root}")
    records: list[CaseRecord] = []
    seen: set[str] = set()
    for file in sorted(root.glob("*.json")):
        try:
            raw = json.loads(file.read_text())
        except json.JSONDecodeError as exc:
            raise SchemaViolation(f"{file.name}: not valid JSON ({exc})") from exc
        record = _parse_case(raw, file.name)
        if record.id in seen:
            raise DuplicateId(f"case id {record.id!r} appears more than once")
        seen.add(record.id)
        records.append(record)
    return records


def case_by_id(cases: list[CaseRecord], case_id: str) -> CaseRecord:
    for case in cases:
        if case.id == case_id:
            return case
    raise MissingFile(f"no case with id {case_id!r}")


def evaluation_to_dict(ev: CaseEvaluation) -> dict:
    return {
        "case_id": ev.case_id,
        "entropy_bits": ev.entropy_bits,
        "n_counted": ev.n_counted,
        "failures": ev.failures,
        "best_match": ev.best.value,
        "top": [
            {"improving": c.improving, "worsening": c.worsening,
             "proportion": proportion, "match": match.value}
            for c, proportion, match in ev.top
        ],
    }


def write_evaluation(directory: str | Path, ev: CaseEvaluation,
                     distribution=None) -> tuple[Path, Path]:
    """Persist eval/<id>.json plus a CSV of (contradiction, count, proportion, match)."""
    root = Path(directory)
    root.mkdir(parents=True, exist_ok=True)
    json_path = root / f"{ev.case_id}.json"
    json_path.write_text(json.dumps(evaluation_to_dict(ev), indent=1) + "\n")

    csv_path = root / f"{ev.case_id}.csv"
    counts = dict(distribution.counts) if distribution is not None else {}
    with open(csv_path, "w", newline="") as fh:
        writer = csv.writer(fh)
        writer.writerow(["improving", "worsening", "count", "proportion", "match"])
        for c, proportion, match in ev.top:
            writer.writerow([c.improving, c.worsening, counts.get(c, ""),
                             f"{proportion:.6f}", match.value])
    return json_path, csv_path
