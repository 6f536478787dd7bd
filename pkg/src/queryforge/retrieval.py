"""Per-language inverted indices with Okapi BM25 ranking.

One index per language; searches return a ranked top-k list for that
language.  Scoring uses BM25 with k1=1.2, b=0.75 and the nonnegative idf
variant idf(t) = ln(1 + (N - df + 0.5) / (df + 0.5)).  Only documents with
positive score are returned, ordered by score descending with ties broken
by doc_id ascending, so results are reproducible across platforms.

Tokenization is deliberately simple and fully specified so fixtures are
portable: lowercased maximal runs of Unicode letters/digits, except that
Chinese text is tokenized as overlapping character bigrams over runs of Han
characters (a length-1 run emits the single character).
"""

from __future__ import annotations

import json
import math
import re
from collections import Counter
from dataclasses import dataclass
from itertools import groupby
from pathlib import Path
from typing import Iterable

from .corpus import Document
from .errors import EmptyIndexError, ValidationError

BM25_K1 = 1.2
BM25_B = 0.75

# Unicode letters/digits without underscore.
_TOKEN_RE = re.compile(r"[^\W_]+", re.UNICODE)

# CJK Unified Ideographs (base + extensions + compatibility block).
_HAN_RANGES = (
    (0x3400, 0x4DBF),
    (0x4E00, 0x9FFF),
    (0xF900, 0xFAFF),
    (0x20000, 0x2A6DF),
    (0x2A700, 0x2EBEF),
    (0x2F800, 0x2FA1F),
)


def _is_han(ch: str) -> bool:
    cp = ord(ch)
    return any(lo <= cp <= hi for lo, hi in _HAN_RANGES)


def tokenize(text: str, lang: str) -> list[str]:
    """Lowercase and split text into index tokens for the given language."""
    text = text.lower()
    if lang != "zh":
        return _TOKEN_RE.findall(text)
    tokens: list[str] = []
    for is_han, chars in groupby(text, key=_is_han):
        run = "".join(chars)
        if is_han:
            if len(run) == 1:
                tokens.append(run)
            else:
                tokens.extend(run[i : i + 2] for i in range(len(run) - 1))
        else:
            tokens.extend(_TOKEN_RE.findall(run))
    return tokens


@dataclass(frozen=True)
class RankEntry:
    doc_id: str
    score: float
    rank: int


@dataclass(frozen=True)
class RankedList:
    lang: str
    entries: tuple[RankEntry, ...]


def validate_ranked_list(ranked: RankedList) -> None:
    """Raise ValidationError unless scores are non-increasing, ranks are
    1..n without gaps, and doc_ids are distinct."""
    seen: set[str] = set()
    prev_score = math.inf
    for i, entry in enumerate(ranked.entries, 1):
        if entry.rank != i:
            raise ValidationError(f"rank {entry.rank} at position {i} (expected {i})")
        if entry.score > prev_score:
            raise ValidationError(f"scores increase at rank {i}")
        if entry.doc_id in seen:
            raise ValidationError(f"duplicate doc_id {entry.doc_id!r} in ranked list")
        seen.add(entry.doc_id)
        prev_score = entry.score


@dataclass(frozen=True)
class LanguageIndex:
    lang: str
    postings: dict[str, tuple[tuple[str, int], ...]]  # term -> ((doc_id, tf), ...)
    doc_lengths: dict[str, int]
    avg_doc_length: float
    doc_count: int

    def doc_frequency(self, term: str) -> int:
        return len(self.postings.get(term, ()))

    def vocabulary(self) -> list[str]:
        return sorted(self.postings)


def bm25_idf(n_docs: int, df: int) -> float:
    """Nonnegative BM25 idf; df=0 yields the maximum value for the corpus."""
    return math.log(1.0 + (n_docs - df + 0.5) / (df + 0.5))


def build_index(docs: Iterable[Document]) -> LanguageIndex:
    """Build the inverted index for one language's documents.

    Input order does not matter: documents are processed in doc_id order so
    the same corpus always yields an identical index.
    """
    docs = sorted(docs, key=lambda d: d.doc_id)
    if not docs:
        raise EmptyIndexError("cannot build an index over zero documents")
    lang = docs[0].lang
    postings: dict[str, list[tuple[str, int]]] = {}
    doc_lengths: dict[str, int] = {}
    for doc in docs:
        if doc.lang != lang:
            raise ValidationError(
                f"document {doc.doc_id!r} has lang {doc.lang!r}, index is {lang!r}"
            )
        tokens = tokenize(doc.text, lang)
        doc_lengths[doc.doc_id] = len(tokens)
        for term, tf in Counter(tokens).items():
            postings.setdefault(term, []).append((doc.doc_id, tf))
    n = len(doc_lengths)
    return LanguageIndex(
        lang=lang,
        postings={t: tuple(p) for t, p in sorted(postings.items())},
        doc_lengths=doc_lengths,
        avg_doc_length=sum(doc_lengths.values()) / n,
        doc_count=n,
    )


def search(index: LanguageIndex, query: str, k: int) -> RankedList:
    """Return the top-k BM25 matches for the query against one index.

    A query that tokenizes to nothing returns an empty list.  Repeated query
    tokens contribute once per occurrence, matching the brute-force scorer
    the tests check against.
    """
    if k < 1:
        raise ValidationError("k must be >= 1")
    tokens = tokenize(query, index.lang)
    scores: dict[str, float] = {}
    for term in tokens:
        postings = index.postings.get(term)
        if not postings:
            continue
        idf = bm25_idf(index.doc_count, len(postings))
        for doc_id, tf in postings:
            dl = index.doc_lengths[doc_id]
            norm = tf + BM25_K1 * (1.0 - BM25_B + BM25_B * dl / index.avg_doc_length)
            scores[doc_id] = scores.get(doc_id, 0.0) + idf * (tf * (BM25_K1 + 1.0)) / norm
    matched = [(doc_id, s) for doc_id, s in scores.items() if s > 0.0]
    matched.sort(key=lambda pair: (-pair[1], pair[0]))
    entries = tuple(
        RankEntry(doc_id=doc_id, score=s, rank=i)
        for i, (doc_id, s) in enumerate(matched[:k], 1)
    )
    return RankedList(lang=index.lang, entries=entries)


def save_index_cache(indices: dict[str, LanguageIndex], path: str | Path) -> None:
    """Persist built indices as a deterministic JSON cache.

    The cache is a convenience; rebuilding from the corpus is the canonical
    representation and produces an identical index.
    """
    payload = {
        lang: {
            "lang": idx.lang,
            "postings": {t: [list(p) for p in plist] for t, plist in idx.postings.items()},
            "doc_lengths": idx.doc_lengths,
            "avg_doc_length": idx.avg_doc_length,
            "doc_count": idx.doc_count,
        }
        for lang, idx in indices.items()
    }
    Path(path).write_text(
        json.dumps(payload, ensure_ascii=False, sort_keys=True), encoding="utf-8"
    )


def load_index_cache(path: str | Path) -> dict[str, LanguageIndex]:
    payload = json.loads(Path(path).read_text(encoding="utf-8"))
    out: dict[str, LanguageIndex] = {}
    for lang, raw in payload.items():
        out[lang] = LanguageIndex(
            lang=raw["lang"],
            postings={
                t: tuple((doc_id, tf) for doc_id, tf in plist)
                for t, plist in raw["postings"].items()
            },
            doc_lengths=dict(raw["doc_lengths"]),
            avg_doc_length=raw["avg_doc_length"],
            doc_count=raw["doc_count"],
        )
    return out
