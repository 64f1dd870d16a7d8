"""Structured output: extract the first JSON object from model text and
validate it against a small field schema, with one corrective re-prompt."""

from __future__ import annotations

import json
from dataclasses import dataclass
from typing import Callable

from ..errors import StructureError
from .messages import ChatMessage, GenerationRequest
from .provider import Gateway


@dataclass(frozen=True)
class IntRange:
    lo: int
    hi: int

    def check(self, value, path: str):
        if isinstance(value, bool) or not isinstance(value, int):
            raise StructureError(f"{path}: expected an integer, got {value!r}")
        if not self.lo <= value <= self.hi:
            raise StructureError(f"{path}: {value} outside {self.lo}..{self.hi}")
        return value


@dataclass(frozen=True)
class NonEmptyText:
    def check(self, value, path: str):
        if not isinstance(value, str) or not value.strip():
            raise StructureError(f"{path}: expected non-empty text")
        return value


@dataclass(frozen=True)
class ListOf:
    item: "ObjectSpec"
    min_items: int = 1

    def check(self, value, path: str):
        if not isinstance(value, list) or len(value) < self.min_items:
            raise StructureError(f"{path}: expected a list of >= {self.min_items} items")
        return [self.item.check(v, f"{path}[{i}]") for i, v in enumerate(value)]


@dataclass(frozen=True)
class ObjectSpec:
    fields: dict

    def check(self, value, path: str):
        if not isinstance(value, dict):
            raise StructureError(f"{path}: expected an object")
        out = {}
        for name, rule in self.fields.items():
            if name not in value:
                raise StructureError(f"{path}: missing required field {name!r}")
            out[name] = rule.check(value[name], f"{path}.{name}")
        return out


@dataclass(frozen=True)
class FieldSpec:
    """Required top-level fields and their value domains."""

    fields: dict

    def validate(self, record: dict) -> dict:
        return ObjectSpec(self.fields).check(record, "$")


def extract_json_object(text: str) -> dict:
    """Pull the first JSON object out of model text.

    Tolerates fenced ```json blocks and surrounding prose by scanning for
    the first balanced top-level {...} region.
    """
    start = text.find("{")
    while start != -1:
        depth = 0
        in_string = False
        escaped = False
        for pos in range(start, len(text)):
            ch = text[pos]
            if in_string:
                if escaped:
                    escaped = False
                elif ch == "\\":
                    escaped = True
                elif ch == '"':
                    in_string = False
                continue
            if ch == '"':
                in_string = True
            elif ch == "{":
                depth += 1
            elif ch == "}":
                depth -= 1
                if depth == 0:
                    candidate = text[start:pos + 1]
                    try:
                        parsed = json.loads(candidate)
                    except json.JSONDecodeError:
                        break
                    if isinstance(parsed, dict):
                        return parsed
                    break
        start = text.find("{", start + 1)
    raise StructureError("no JSON object found in model output")


CORRECTIVE_INSTRUCTION = (
    "Your previous reply could not be parsed: {reason}. "
    "Respond again with a single valid JSON object and nothing else."
)

Validator = Callable[[dict], dict]


def complete_structured(gateway: Gateway, req: GenerationRequest,
                        schema: FieldSpec) -> dict:
    """Run the request, parse and validate its JSON output.

    On parse or validation failure the request is re-issued once with a
    corrective instruction appended; a second failure raises
    StructureError.
    """
    text = gateway.complete(req)
    try:
        return schema.validate(extract_json_object(text))
    except StructureError as first:
        retry = req.with_extra_message(
            ChatMessage(role="user",
                        content=CORRECTIVE_INSTRUCTION.format(reason=first)))
        text = gateway.complete(retry)
        try:
            return schema.validate(extract_json_object(text))
        except StructureError as second:
            raise StructureError(
                f"structured output failed after corrective retry: {second}") from second
