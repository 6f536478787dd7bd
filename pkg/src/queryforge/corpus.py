"""Multilingual document store: ingest, offline translations, event spans.

Documents, translations, and span annotations arrive as separate JSON Lines
files (one object per line).  Ingest and the attach_* operations collect
per-record diagnostics instead of failing wholesale; re-attaching data for a
document is last-write-wins so replaying a stream converges.

All span offsets are indices into the text as a sequence of Unicode scalar
values (i.e. plain Python string indices), never bytes.
"""

from __future__ import annotations

import json
from dataclasses import dataclass, field
from pathlib import Path
from typing import Any, Iterable, Iterator

from .errors import NotFoundError, ValidationError

SUPPORTED_LANGS = ("en", "ar", "fa", "zh", "ko", "ru")
SPAN_KINDS = ("trigger", "argument")


@dataclass(frozen=True)
class Document:
    doc_id: str
    lang: str
    text: str
    title: str | None = None

    def __post_init__(self):
        if not self.doc_id or not isinstance(self.doc_id, str):
            raise ValidationError("doc_id must be a non-empty string")
        if self.lang not in SUPPORTED_LANGS:
            raise ValidationError(
                f"unsupported lang {self.lang!r} (expected one of {', '.join(SUPPORTED_LANGS)})"
            )
        if not self.text or not isinstance(self.text, str):
            raise ValidationError("text must be a non-empty string")


@dataclass(frozen=True)
class EventSpan:
    kind: str
    start: int
    end: int
    label: str = ""

    def __post_init__(self):
        if self.kind not in SPAN_KINDS:
            raise ValidationError(f"span kind must be one of {SPAN_KINDS}, got {self.kind!r}")
        if not isinstance(self.start, int) or not isinstance(self.end, int):
            raise ValidationError("span offsets must be integers")
        if not 0 <= self.start < self.end:
            raise ValidationError(f"invalid span offsets ({self.start}, {self.end})")


@dataclass(frozen=True)
class DocumentView:
    document: Document
    translation: str | None
    spans: tuple[EventSpan, ...]


@dataclass(frozen=True)
class HighlightSegment:
    text: str
    kinds: frozenset[str]


@dataclass
class IngestReport:
    """Outcome of an ingest/attach pass: how many records landed, what didn't."""

    accepted: int = 0
    diagnostics: list[str] = field(default_factory=list)


class _BadLine:
    """Sentinel for a line that failed to parse; carries the parse message."""

    def __init__(self, message: str):
        self.message = message


def _iter_jsonl(path: str | Path) -> Iterator[tuple[str, Any]]:
    with open(path, encoding="utf-8") as fh:
        for lineno, line in enumerate(fh, 1):
            if not line.strip():
                continue
            try:
                yield f"line {lineno}", json.loads(line)
            except json.JSONDecodeError as exc:
                yield f"line {lineno}", _BadLine(str(exc))


def _iter_records(records: Iterable[Any]) -> Iterator[tuple[str, Any]]:
    for pos, rec in enumerate(records, 1):
        yield f"record {pos}", rec


class CorpusStore:
    """Container for documents plus their translations and span annotations.

    Writes (ingest/attach) are a single-writer setup phase; once indices are
    built over the store it is treated as immutable and reads are safe from
    any number of threads.
    """

    def __init__(self):
        self._docs: dict[str, Document] = {}
        self._translations: dict[str, str] = {}
        self._spans: dict[str, tuple[EventSpan, ...]] = {}

    def __len__(self) -> int:
        return len(self._docs)

    def __contains__(self, doc_id: str) -> bool:
        return doc_id in self._docs

    def doc_ids(self) -> list[str]:
        return sorted(self._docs)

    def languages(self) -> list[str]:
        return sorted({d.lang for d in self._docs.values()})

    def documents_for(self, lang: str) -> list[Document]:
        return sorted(
            (d for d in self._docs.values() if d.lang == lang), key=lambda d: d.doc_id
        )

    def document(self, doc_id: str) -> Document:
        try:
            return self._docs[doc_id]
        except KeyError:
            raise NotFoundError(f"unknown document {doc_id!r}") from None

    def get_view(self, doc_id: str) -> DocumentView:
        doc = self.document(doc_id)
        return DocumentView(
            document=doc,
            translation=self._translations.get(doc_id),
            spans=self._spans.get(doc_id, ()),
        )


def ingest_documents(records: Iterable[Any]) -> tuple[CorpusStore, IngestReport]:
    """Build a store from parsed document records (dicts)."""
    return _ingest(_iter_records(records))


def load_documents(path: str | Path) -> tuple[CorpusStore, IngestReport]:
    """Build a store from a JSON Lines documents file."""
    return _ingest(_iter_jsonl(path))


def _ingest(pairs: Iterable[tuple[str, Any]]) -> tuple[CorpusStore, IngestReport]:
    store = CorpusStore()
    report = IngestReport()
    for where, rec in pairs:
        if isinstance(rec, _BadLine):
            report.diagnostics.append(f"{where}: invalid JSON: {rec.message}")
            continue
        if not isinstance(rec, dict):
            report.diagnostics.append(f"{where}: expected an object")
            continue
        try:
            doc = Document(
                doc_id=rec.get("doc_id"),
                lang=rec.get("lang"),
                text=rec.get("text"),
                title=_opt_str(rec.get("title"), where, "title"),
            )
        except ValidationError as exc:
            report.diagnostics.append(f"{where}: {exc}")
            continue
        if doc.doc_id in store:
            report.diagnostics.append(f"{where}: duplicate doc_id {doc.doc_id!r}")
            continue
        store._docs[doc.doc_id] = doc
        report.accepted += 1
    return store, report


def _opt_str(value: Any, where: str, name: str) -> str | None:
    if value is None:
        return None
    if not isinstance(value, str):
        raise ValidationError(f"{name} must be a string")
    return value


def attach_translations(store: CorpusStore, records: Iterable[Any]) -> IngestReport:
    """Attach offline translations; unknown doc_ids are skipped and reported."""
    return _attach_translations(store, _iter_records(records))


def load_translations(store: CorpusStore, path: str | Path) -> IngestReport:
    return _attach_translations(store, _iter_jsonl(path))


def _attach_translations(
    store: CorpusStore, pairs: Iterable[tuple[str, Any]]
) -> IngestReport:
    report = IngestReport()
    for where, rec in pairs:
        if isinstance(rec, _BadLine):
            report.diagnostics.append(f"{where}: invalid JSON: {rec.message}")
            continue
        if not isinstance(rec, dict):
            report.diagnostics.append(f"{where}: expected an object")
            continue
        doc_id = rec.get("doc_id")
        translation = rec.get("translation")
        if not isinstance(doc_id, str) or not isinstance(translation, str):
            report.diagnostics.append(f"{where}: needs string doc_id and translation")
            continue
        if doc_id not in store:
            report.diagnostics.append(f"{where}: unknown doc_id {doc_id!r}")
            continue
        store._translations[doc_id] = translation
        report.accepted += 1
    return report


def attach_annotations(store: CorpusStore, records: Iterable[Any]) -> IngestReport:
    """Attach span annotations, validating offsets against each document.

    Invalid spans are rejected individually; the record still attaches with
    its remaining valid spans.  Re-attachment replaces the prior span list.
    """
    return _attach_annotations(store, _iter_records(records))


def load_annotations(store: CorpusStore, path: str | Path) -> IngestReport:
    return _attach_annotations(store, _iter_jsonl(path))


def _attach_annotations(
    store: CorpusStore, pairs: Iterable[tuple[str, Any]]
) -> IngestReport:
    report = IngestReport()
    for where, rec in pairs:
        if isinstance(rec, _BadLine):
            report.diagnostics.append(f"{where}: invalid JSON: {rec.message}")
            continue
        if not isinstance(rec, dict):
            report.diagnostics.append(f"{where}: expected an object")
            continue
        doc_id = rec.get("doc_id")
        raw_spans = rec.get("spans")
        if not isinstance(doc_id, str) or not isinstance(raw_spans, list):
            report.diagnostics.append(f"{where}: needs string doc_id and a spans list")
            continue
        if doc_id not in store:
            report.diagnostics.append(f"{where}: unknown doc_id {doc_id!r}")
            continue
        text_len = len(store.document(doc_id).text)
        kept: list[EventSpan] = []
        for i, raw in enumerate(raw_spans):
            if not isinstance(raw, dict):
                report.diagnostics.append(f"{where}: span {i}: expected an object")
                continue
            try:
                span = EventSpan(
                    kind=raw.get("kind"),
                    start=raw.get("start"),
                    end=raw.get("end"),
                    label=raw.get("label", ""),
                )
            except ValidationError as exc:
                report.diagnostics.append(f"{where}: span {i}: {exc}")
                continue
            if span.end > text_len:
                report.diagnostics.append(
                    f"{where}: span {i}: end {span.end} exceeds text length {text_len}"
                )
                continue
            kept.append(span)
        store._spans[doc_id] = tuple(kept)
        report.accepted += 1
    return report


def highlight(text: str, spans: Iterable[EventSpan]) -> list[HighlightSegment]:
    """Cut text into display segments at span boundaries.

    Segment boundaries fall exactly on the sorted set of span endpoints
    (plus the text's own ends); each segment carries the kinds of every span
    covering it, so overlapping trigger/argument spans merge their kind sets
    over the overlapped region.  Concatenating the segments reproduces the
    input text exactly.
    """
    spans = list(spans)
    for span in spans:
        if span.end > len(text):
            raise ValidationError(
                f"span ({span.start}, {span.end}) exceeds text length {len(text)}"
            )
    if not text:
        return []
    points = {0, len(text)}
    for span in spans:
        points.add(span.start)
        points.add(span.end)
    ordered = sorted(points)
    segments = []
    for a, b in zip(ordered, ordered[1:]):
        kinds = frozenset(s.kind for s in spans if s.start <= a and b <= s.end)
        segments.append(HighlightSegment(text=text[a:b], kinds=kinds))
    return segments
