"""Editable few-shot prompts: an instruction, ordered (document, query)
exemplar pairs, and a target document.

The rendered text format is normative (golden-tested) because downstream
code depends on it: the extractive generator detects exemplar query lines by
their "Query: " prefix, and renders must be bit-stable for replay.

    <instruction>
    <blank>
    Document: <exemplar document>
    Query: <exemplar query>
    <blank>
    ...
    Document: <target document>
    Query:

All prompt operations are value-style: they return a new Prompt and never
mutate the input.
"""

from __future__ import annotations

import json
import re
from dataclasses import dataclass, replace
from pathlib import Path

from .errors import ValidationError

ORIGIN_DEFAULT = "default"
ORIGIN_FEEDBACK = "feedback"
ORIGIN_MANUAL = "manual"
_ORIGINS = (ORIGIN_DEFAULT, ORIGIN_FEEDBACK, ORIGIN_MANUAL)

_TARGET_SUFFIX = "\nQuery:"
_DOC_PREFIX = "Document: "
_QUERY_LINE_RE = re.compile(r"^Query: (.+)$", re.MULTILINE)


@dataclass(frozen=True)
class Instruction:
    id: str
    text: str

    def __post_init__(self):
        if not self.id:
            raise ValidationError("instruction id must be non-empty")
        if not self.text:
            raise ValidationError("instruction text must be non-empty")


@dataclass(frozen=True)
class ExemplarPair:
    document_text: str
    query_text: str
    origin: str

    def __post_init__(self):
        if not self.document_text:
            raise ValidationError("exemplar document_text must be non-empty")
        if not self.query_text:
            raise ValidationError("exemplar query_text must be non-empty")
        if self.origin not in _ORIGINS:
            raise ValidationError(f"unknown exemplar origin {self.origin!r}")


@dataclass(frozen=True)
class Prompt:
    instruction: Instruction
    exemplars: tuple[ExemplarPair, ...]
    target_document_text: str

    def render(self) -> str:
        parts = [self.instruction.text, "\n\n"]
        for pair in self.exemplars:
            parts += [_DOC_PREFIX, pair.document_text, "\nQuery: ", pair.query_text, "\n\n"]
        parts += [_DOC_PREFIX, self.target_document_text, "\nQuery:"]
        return "".join(parts)

    def add_feedback(self, document_text: str, query_text: str) -> Prompt:
        """Append a feedback exemplar at the end; duplicates are allowed."""
        pair = ExemplarPair(document_text, query_text, ORIGIN_FEEDBACK)
        return replace(self, exemplars=self.exemplars + (pair,))

    def edit_exemplar(
        self,
        index: int,
        document_text: str | None = None,
        query_text: str | None = None,
    ) -> Prompt:
        """Replace the addressed fields; the pair's origin becomes manual
        even if both fields are left absent."""
        old = self._pair_at(index)
        pair = ExemplarPair(
            document_text if document_text is not None else old.document_text,
            query_text if query_text is not None else old.query_text,
            ORIGIN_MANUAL,
        )
        exemplars = self.exemplars[:index] + (pair,) + self.exemplars[index + 1 :]
        return replace(self, exemplars=exemplars)

    def reorder(self, permutation: list[int]) -> Prompt:
        """Reorder exemplars: new position i holds old exemplar permutation[i]."""
        if sorted(permutation) != list(range(len(self.exemplars))):
            raise ValidationError(
                f"permutation {permutation!r} is not a bijection on 0..{len(self.exemplars) - 1}"
            )
        return replace(self, exemplars=tuple(self.exemplars[i] for i in permutation))

    def remove_exemplar(self, index: int) -> Prompt:
        self._pair_at(index)
        return replace(
            self, exemplars=self.exemplars[:index] + self.exemplars[index + 1 :]
        )

    def _pair_at(self, index: int) -> ExemplarPair:
        if not isinstance(index, int) or not 0 <= index < len(self.exemplars):
            raise ValidationError(
                f"exemplar index {index!r} out of range (have {len(self.exemplars)})"
            )
        return self.exemplars[index]


def parse_rendered_prompt(rendered: str) -> tuple[str, list[str]]:
    """Split a rendered prompt into (target document text, exemplar queries).

    Best-effort inverse of Prompt.render(): the target is everything after
    the last "Document: " block opener, exemplar queries are the "Query: "
    lines before it.  Document texts that themselves contain such markers
    can fool this; a payload that does not look like a rendered prompt is
    treated as a bare target with no exemplars.
    """
    if not rendered.endswith(_TARGET_SUFFIX):
        return rendered, []
    body = rendered[: -len(_TARGET_SUFFIX)]
    marker = "\n" + _DOC_PREFIX
    idx = body.rfind(marker)
    if idx < 0:
        if body.startswith(_DOC_PREFIX):
            return body[len(_DOC_PREFIX) :], []
        return rendered, []
    target = body[idx + len(marker) :]
    head = body[:idx]
    return target, _QUERY_LINE_RE.findall(head)


DEFAULT_INSTRUCTIONS = (
    Instruction("i1", "Generate a search query for the following document:"),
    Instruction("i2", "Write a short keyword query that would retrieve this document:"),
    Instruction("i3", "Summarize this document as a search query:"),
)

DEFAULT_EXEMPLARS = (
    ExemplarPair(
        "Heavy rains flooded the river delta, forcing hundreds of families to evacuate their homes.",
        "flood evacuation",
        ORIGIN_DEFAULT,
    ),
    ExemplarPair(
        "The city council approved a new subsidy for rooftop solar panels on public buildings.",
        "solar subsidy vote",
        ORIGIN_DEFAULT,
    ),
)


class InstructionCatalog:
    """The instruction options offered to users; the first entry is the
    default for new sessions."""

    def __init__(self, instructions: tuple[Instruction, ...] = DEFAULT_INSTRUCTIONS):
        if not instructions:
            raise ValidationError("instruction catalog must not be empty")
        ids = [ins.id for ins in instructions]
        if len(set(ids)) != len(ids):
            raise ValidationError("instruction ids must be unique")
        self.instructions = tuple(instructions)
        self._by_id = {ins.id: ins for ins in instructions}

    def get(self, instruction_id: str) -> Instruction:
        try:
            return self._by_id[instruction_id]
        except KeyError:
            raise ValidationError(f"unknown instruction {instruction_id!r}") from None

    def default(self) -> Instruction:
        return self.instructions[0]

    @classmethod
    def from_file(cls, path: str | Path) -> InstructionCatalog:
        raw = json.loads(Path(path).read_text(encoding="utf-8"))
        if not isinstance(raw, list):
            raise ValidationError("instruction catalog file must be a JSON array")
        return cls(tuple(Instruction(item["id"], item["text"]) for item in raw))
