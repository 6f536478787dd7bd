"""Candidate query generation from an example document or a rendered prompt.

Backends are pluggable behind one interface:

* ExtractiveBackend — deterministic offline generator.  Ranks the payload's
  terms by tf-idf against a language index, then emits stride-1 windows over
  the ranked term list so the candidates are distinct but related.  In
  prompt mode the term source is the prompt's target document, and any term
  that appears in an exemplar query line gets its weight doubled — which is
  what makes prompt feedback observably change the generations.
* RemoteBackend — speaks a minimal HTTP protocol any model server can
  implement: POST <endpoint>/v1/generate with
  {"prompt": str, "n": int, "max_tokens": int, "temperature": number},
  expecting 200 and {"texts": [str, ...]}.  Anything else is a backend
  failure.

generate() post-processes any backend's raw texts the same way: blank texts
are dropped, duplicates are removed under whitespace/case normalization,
the list is truncated to the requested n, and seq_no is assigned in
emission order.
"""

from __future__ import annotations

from abc import ABC, abstractmethod
from collections import Counter
from dataclasses import dataclass
from typing import Iterable, Mapping, Sequence

import httpx

from .errors import BackendError, ValidationError
from .promptkit import parse_rendered_prompt
from .retrieval import LanguageIndex, bm25_idf, tokenize

MODE_FROM_DOCUMENT = "from_document"
MODE_FROM_PROMPT = "from_prompt"


@dataclass(frozen=True)
class GenerationRequest:
    mode: str
    payload: str
    n: int = 5
    max_query_terms: int = 6
    temperature: float = 0.0
    lang: str | None = None  # payload language hint; None means the backend default

    def __post_init__(self):
        if self.mode not in (MODE_FROM_DOCUMENT, MODE_FROM_PROMPT):
            raise ValidationError(f"unknown generation mode {self.mode!r}")
        if not self.payload:
            raise ValidationError("payload must be non-empty")
        if not isinstance(self.n, int) or self.n < 1:
            raise ValidationError("n must be a positive integer")
        if not isinstance(self.max_query_terms, int) or self.max_query_terms < 1:
            raise ValidationError("max_query_terms must be a positive integer")
        if self.temperature < 0:
            raise ValidationError("temperature must be >= 0")


@dataclass(frozen=True)
class GeneratedQuery:
    text: str
    backend_id: str
    seq_no: int


def normalize_query_text(text: str) -> str:
    """Trim, collapse internal whitespace, and case-fold for dedup."""
    return " ".join(text.split()).casefold()


def dedup_queries(queries: Sequence[GeneratedQuery]) -> list[GeneratedQuery]:
    """Order-preserving removal of duplicates under normalization."""
    seen: set[str] = set()
    out: list[GeneratedQuery] = []
    for query in queries:
        key = normalize_query_text(query.text)
        if key in seen:
            continue
        seen.add(key)
        out.append(query)
    return out


class GeneratorBackend(ABC):
    backend_id: str
    kind: str

    @abstractmethod
    def generate_texts(self, req: GenerationRequest) -> list[str]:
        """Produce raw candidate texts; may raise BackendError."""


def generate(backend: GeneratorBackend, req: GenerationRequest) -> list[GeneratedQuery]:
    """Run a backend and normalize its output into at most n distinct queries."""
    texts = backend.generate_texts(req)
    seen: set[str] = set()
    kept: list[str] = []
    for text in texts:
        key = normalize_query_text(text)
        if not key or key in seen:
            continue
        seen.add(key)
        kept.append(text)
        if len(kept) == req.n:
            break
    return [
        GeneratedQuery(text=text, backend_id=backend.backend_id, seq_no=i)
        for i, text in enumerate(kept)
    ]


def rank_terms(
    tokens: Sequence[str],
    index: LanguageIndex | None,
    boosted: Iterable[str] = (),
) -> list[str]:
    """Order the unique payload terms by tf * idf, descending.

    idf comes from the language index (df=0 for unseen terms, which gives
    them the corpus maximum); with no index at all every term gets ln(2).
    Terms in `boosted` have their weight doubled before sorting.  Ties break
    lexicographically.
    """
    tf = Counter(tokens)
    boosted = frozenset(boosted)
    n_docs = index.doc_count if index is not None else 0

    def weight(term: str) -> float:
        df = index.doc_frequency(term) if index is not None else 0
        w = tf[term] * bm25_idf(n_docs, df)
        return 2.0 * w if term in boosted else w

    return sorted(tf, key=lambda t: (-weight(t), t))


class ExtractiveBackend(GeneratorBackend):
    """Deterministic tf-idf query generator; needs no network or model.

    Candidate j is the stride-1 window terms[j : j+L] over the ranked term
    list, L = min(max_query_terms, number of unique terms), joined with
    single spaces.  Identical (corpus, request) inputs always produce an
    identical candidate list.
    """

    kind = "extractive"

    def __init__(
        self,
        indices: Mapping[str, LanguageIndex],
        backend_id: str = "extractive",
        default_lang: str = "en",
    ):
        self.backend_id = backend_id
        self.default_lang = default_lang
        self._indices = indices

    def generate_texts(self, req: GenerationRequest) -> list[str]:
        lang = req.lang or self.default_lang
        if req.mode == MODE_FROM_PROMPT:
            target, exemplar_queries = parse_rendered_prompt(req.payload)
            tokens = tokenize(target, lang)
            boosted = {t for q in exemplar_queries for t in tokenize(q, lang)}
        else:
            tokens = tokenize(req.payload, lang)
            boosted = set()
        ranked = rank_terms(tokens, self._indices.get(lang), boosted)
        length = min(req.max_query_terms, len(ranked))
        if length == 0:
            return []
        windows = [
            " ".join(ranked[j : j + length]) for j in range(len(ranked) - length + 1)
        ]
        return windows[: req.n]


class RemoteBackend(GeneratorBackend):
    """HTTP client for a remote generator speaking the wire protocol above."""

    kind = "remote"

    def __init__(self, backend_id: str, endpoint: str, timeout: float = 10.0):
        self.backend_id = backend_id
        self.endpoint = endpoint.rstrip("/")
        self.timeout = timeout

    def generate_texts(self, req: GenerationRequest) -> list[str]:
        body = {
            "prompt": req.payload,
            "n": req.n,
            "max_tokens": req.max_query_terms,
            "temperature": req.temperature,
        }
        try:
            response = httpx.post(
                f"{self.endpoint}/v1/generate", json=body, timeout=self.timeout
            )
        except httpx.HTTPError as exc:
            raise BackendError(self.backend_id, f"request failed: {exc}") from exc
        if response.status_code != 200:
            raise BackendError(self.backend_id, f"status {response.status_code}")
        try:
            data = response.json()
        except ValueError as exc:
            raise BackendError(self.backend_id, "response is not JSON") from exc
        texts = data.get("texts") if isinstance(data, dict) else None
        if not isinstance(texts, list) or any(not isinstance(t, str) for t in texts):
            raise BackendError(self.backend_id, 'response lacks a "texts" string list')
        return list(texts)
