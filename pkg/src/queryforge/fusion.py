"""Reciprocal rank fusion of per-language (or per-query) rank lists.

score(d) = sum over lists containing d of 1 / (k_const + rank(d)), with
1-based ranks.  A document absent from a list simply contributes nothing
from it.  The per-document reciprocal terms are summed in ascending rank
order so fusing the same lists in any input order produces a bit-identical
result.
"""

from __future__ import annotations

from dataclasses import dataclass
from typing import Iterable

from .errors import ValidationError
from .retrieval import RankedList, validate_ranked_list


@dataclass(frozen=True)
class FusedEntry:
    doc_id: str
    score: float
    langs: frozenset[str]


@dataclass(frozen=True)
class FusedRanking:
    entries: tuple[FusedEntry, ...]


def rrf_fuse(
    lists: Iterable[RankedList], k_const: int = 60, *, top_k: int
) -> FusedRanking:
    """Fuse rank lists into one ranking, truncated to top_k.

    Ties are broken by doc_id ascending.  An empty list-of-lists fuses to an
    empty ranking.
    """
    if not isinstance(k_const, int) or k_const < 1:
        raise ValidationError("k_const must be a positive integer")
    if not isinstance(top_k, int) or top_k < 1:
        raise ValidationError("top_k must be a positive integer")
    lists = list(lists)
    for ranked in lists:
        validate_ranked_list(ranked)

    occurrences: dict[str, list[tuple[int, str]]] = {}
    for ranked in lists:
        for entry in ranked.entries:
            occurrences.setdefault(entry.doc_id, []).append((entry.rank, ranked.lang))

    fused: list[FusedEntry] = []
    for doc_id, hits in occurrences.items():
        hits.sort()
        score = 0.0
        for rank, _ in hits:
            score += 1.0 / (k_const + rank)
        fused.append(
            FusedEntry(doc_id=doc_id, score=score, langs=frozenset(l for _, l in hits))
        )
    fused.sort(key=lambda e: (-e.score, e.doc_id))
    return FusedRanking(entries=tuple(fused[:top_k]))
