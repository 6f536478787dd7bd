"""
Per-language BM25 search and cross-language reciprocal rank fusion.
===================================================================

Run from the repository root:  python3 demos/02_search_and_fusion.py
"""

from pathlib import Path

from queryforge import build_index, load_documents, rrf_fuse, search, tokenize
from queryforge.corpus import load_translations

FIXTURES = Path(__file__).resolve().parent.parent / "fixtures"

store, _ = load_documents(FIXTURES / "documents.jsonl")
load_translations(store, FIXTURES / "translations.jsonl")

# One inverted index per language.  Chinese is tokenized as character
# bigrams, everything else as lowercased letter/digit runs.
indices = {lang: build_index(store.documents_for(lang)) for lang in store.languages()}
for lang, idx in sorted(indices.items()):
    print(f"{lang}: {idx.doc_count} docs, {len(idx.postings)} terms, avgdl {idx.avg_doc_length:.1f}")
print("zh tokens for '太阳能板':", tokenize("太阳能板", "zh"))

# A query in one language ranks that language's documents by BM25.
print()
print("en query 'flood families evacuate':")
for entry in search(indices["en"], "flood families evacuate", 5).entries:
    print(f"  #{entry.rank} {entry.doc_id:14s} score {entry.score:.4f}")

# Shared tokens (numbers, names) appear in several languages, so one query
# can produce a rank list per language; reciprocal rank fusion combines the
# lists into a single cross-language ranking.
query = "2024"
lists = [search(indices[lang], query, 100) for lang in sorted(indices)]
fused = rrf_fuse(lists, k_const=60, top_k=10)
print()
print(f"fused ranking for {query!r}:")
for entry in fused.entries:
    view = store.get_view(entry.doc_id)
    gloss = view.translation or view.document.text
    print(f"  {entry.doc_id:14s} rrf {entry.score:.6f} langs={sorted(entry.langs)}  {gloss[:60]}")

# Fusion only ever reorders what the per-language searches returned: with a
# single input list the order passes through untouched.
single = rrf_fuse([search(indices["ar"], "فرق الطوارئ", 100)], top_k=10)
print()
print("single-list fusion preserves BM25 order:", [e.doc_id for e in single.entries])
