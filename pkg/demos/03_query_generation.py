"""
Query-by-example: derive candidate queries from an example document with
the deterministic extractive backend, or from any server speaking the
remote generator protocol.
=========================================================================

Run from the repository root:  python3 demos/03_query_generation.py
"""

from pathlib import Path

from queryforge import (
    ExtractiveBackend,
    GenerationRequest,
    RemoteBackend,
    build_index,
    generate,
    load_documents,
)
from queryforge.stubgen import StubGeneratorServer

FIXTURES = Path(__file__).resolve().parent.parent / "fixtures"

store, _ = load_documents(FIXTURES / "documents.jsonl")
indices = {lang: build_index(store.documents_for(lang)) for lang in store.languages()}

# The extractive backend ranks the document's terms by tf-idf against the
# language index, then emits stride-1 windows over the ranked terms: each
# candidate shifts one term further down the ranking.
backend = ExtractiveBackend(indices)
doc = store.document("en-solar-02")
print("example document:", doc.text)
print()
req = GenerationRequest(mode="from_document", payload=doc.text, n=4, lang=doc.lang)
for query in generate(backend, req):
    print(f"  candidate {query.seq_no}: {query.text}")

# The same works for any language in the corpus.
doc = store.document("zh-protest-03")
req = GenerationRequest(mode="from_document", payload=doc.text, n=3, max_query_terms=4, lang="zh")
print()
print("zh example:", doc.text)
for query in generate(backend, req):
    print(f"  candidate {query.seq_no}: {query.text}")

# Remote backends speak a single-endpoint HTTP protocol
# (POST /v1/generate -> {"texts": [...]}); the bundled stub server
# implements it so the plumbing can be exercised without a model.
with StubGeneratorServer(["solar subsidy rooftop", "council vote 2024", "solar subsidy rooftop"]) as stub:
    remote = RemoteBackend("demo-llm", stub.base_url)
    req = GenerationRequest(mode="from_document", payload=store.document("en-solar-02").text, n=5)
    queries = generate(remote, req)
    print()
    print(f"remote backend at {stub.base_url} returned (deduped):")
    for query in queries:
        print(f"  {query.text}")
    print("wire request body keys:", sorted(stub.requests[0]))
