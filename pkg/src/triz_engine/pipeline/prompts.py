"""Prompt assets and message composition for the reasoning stages.

The module instruction texts are stored verbatim as text files next to
this module and are checksum-pinned by the test suite, so any drift fails
CI.  Composition injects the knowledge base into the instructions: the
full 39-parameter list for contradiction detection, and only the selected
principles for solution generation.
"""

from __future__ import annotations

import hashlib
from importlib import resources
from pathlib import Path

from ..gateway import ChatMessage, GenerationRequest
from ..kb import Contradiction, InventivePrinciple, KnowledgeBase

PROMPT_NAMES = ("system", "module1", "module2", "module3", "module4", "module5")

_PARAMETERS_PLACEHOLDER = "{Engineering_Parameters}"
_EXAMPLES_PLACEHOLDER = "{Examples}"
_OUTPUT_FORMAT_PLACEHOLDER = "{Output_Format_Example}"

# Output-format directives are engine plumbing, deliberately kept out of the
# pinned instruction files.
CONTRADICTION_DIRECTIVE = (
    'Reply with a single JSON object of the form '
    '{"improving": <integer 1-39>, "worsening": <integer 1-39>} and nothing else.'
)

SOLUTIONS_DIRECTIVE = (
    'Reply with a single JSON object of the form '
    '{"solutions": [{"principle_index": <integer>, "title": "<short solution name>", '
    '"body": "<the full solution text>"}]}. Produce at least one solution for every '
    'principle listed above, tag each solution with the index of the principle it '
    'applies, and output nothing besides the JSON object.'
)

SUMMARY_FORMAT = (
    "# Problem\n"
    "<condensed problem statement>\n"
    "# Identified Contradiction\n"
    "<one paragraph naming the improving and worsening parameters>\n"
    "# Inventive Principles\n"
    "<one line per principle>\n"
    "# Solutions\n"
    "<one condensed subsection per solution>"
)

SUMMARY_DIRECTIVE = (
    'Deliver the summary as a single JSON object of the form '
    '{"problem": "<markdown>", "contradiction": "<markdown>", '
    '"solutions": [{"principle_index": <integer>, "summary": "<markdown>"}]} '
    'with one entry per solution, and nothing else.'
)


def prompt_dir() -> Path:
    return Path(resources.files("triz_engine.pipeline") / "prompts")


def load_prompt(name: str, override_dir: str | Path | None = None) -> str:
    base = Path(override_dir) if override_dir else prompt_dir()
    return (base / f"{name}.txt").read_text()


def prompt_checksums(override_dir: str | Path | None = None) -> dict[str, str]:
    base = Path(override_dir) if override_dir else prompt_dir()
    out = {}
    for name in PROMPT_NAMES:
        out[name] = hashlib.sha256((base / f"{name}.txt").read_bytes()).hexdigest()
    return out


def _system_message() -> ChatMessage:
    return ChatMessage(role="system", content=load_prompt("system"))


def compose_distill(raw_text: str, *, temperature: float = 1.0,
                    seed: int | None = None) -> GenerationRequest:
    return GenerationRequest(
        messages=(
            _system_message(),
            ChatMessage(role="assistant", content=load_prompt("module1")),
            ChatMessage(role="user", content=raw_text),
        ),
        temperature=temperature, seed=seed,
    )


def compose_identify(problem_text: str, kb: KnowledgeBase, *,
                     temperature: float = 1.0,
                     seed: int | None = None) -> GenerationRequest:
    instructions = load_prompt("module2")
    instructions = instructions.replace(_PARAMETERS_PLACEHOLDER,
                                        "\n" + kb.serialize_parameters())
    instructions = instructions.replace(_EXAMPLES_PLACEHOLDER,
                                        "\n" + load_prompt("examples").strip())
    return GenerationRequest(
        messages=(
            _system_message(),
            ChatMessage(role="assistant",
                        content=instructions + "\n" + CONTRADICTION_DIRECTIVE),
            ChatMessage(role="user", content=problem_text),
        ),
        temperature=temperature, seed=seed,
    )


def serialize_principles(principles: list[InventivePrinciple]) -> str:
    return "\n".join(p.serialize() for p in principles)


def describe_contradiction(c: Contradiction, kb: KnowledgeBase) -> str:
    imp = kb.parameter(c.improving)
    wor = kb.parameter(c.worsening)
    return (f"improving parameter {imp.index} ({imp.title}) versus "
            f"worsening parameter {wor.index} ({wor.title})")


def compose_generate(problem_text: str, c: Contradiction | None,
                     principles: list[InventivePrinciple], kb: KnowledgeBase, *,
                     temperature: float = 1.0,
                     seed: int | None = None) -> GenerationRequest:
    context = (load_prompt("module4")
               + "\nRelevant inventive principles:\n"
               + serialize_principles(principles)
               + "\n" + SOLUTIONS_DIRECTIVE)
    user = f"Problem statement: {problem_text}"
    if c is not None:
        user += f"\nEngineering contradiction: {describe_contradiction(c, kb)}."
    return GenerationRequest(
        messages=(
            _system_message(),
            ChatMessage(role="assistant", content=context),
            ChatMessage(role="user", content=user),
        ),
        temperature=temperature, seed=seed,
    )


def compose_summarize(report_text: str, *, temperature: float = 1.0,
                      seed: int | None = None) -> GenerationRequest:
    instructions = load_prompt("module5").replace(
        _OUTPUT_FORMAT_PLACEHOLDER, "\n" + SUMMARY_FORMAT)
    return GenerationRequest(
        messages=(
            _system_message(),
            ChatMessage(role="assistant",
                        content=instructions + "\n" + SUMMARY_DIRECTIVE),
            ChatMessage(role="user", content=report_text),
        ),
        temperature=temperature, seed=seed,
    )
