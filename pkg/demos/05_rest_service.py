"""
The REST surface end to end, exercised in-process.  The same app serves
real HTTP via `queryforge serve --config fixtures/config.json`.
=====================================================================

Run from the repository root:  python3 demos/05_rest_service.py
"""

from pathlib import Path

from fastapi.testclient import TestClient

from queryforge import load_config
from queryforge.api import create_app

FIXTURES = Path(__file__).resolve().parent.parent / "fixtures"

client = TestClient(create_app(load_config(FIXTURES / "config.json")))

print("GET /api/health ->", client.get("/api/health").json())

# Manual search: fused cross-language results with highlight segments.
body = client.get("/api/search", params={"q": "2024", "k": "3"}).json()
print()
print("GET /api/search?q=2024&k=3")
for result in body["results"]:
    print(f"  {result['doc_id']:14s} [{result['lang']}] score {result['score']:.5f}")

# Query-by-example generation from a stored document.
body = client.post("/api/generate", json={"doc_id": "en-protest-03", "n": 3}).json()
print()
print("POST /api/generate {doc_id: en-protest-03}")
for query in body["queries"]:
    print("  ", query["text"])

# The session loop over HTTP; every response carries the full session view.
view = client.post("/api/sessions", json={"doc_id": "en-flood-01"}).json()
sid = view["session_id"]
view = client.post(f"/api/sessions/{sid}/generate", json={}).json()
gen1 = [q["text"] for q in view["generations"][-1]["queries"]]
view = client.post(f"/api/sessions/{sid}/retrieve", json={"selection": "all"}).json()
hit = next(r for r in view["last_retrieval"]["results"] if r["doc_id"] != "en-flood-01")
view = client.post(
    f"/api/sessions/{sid}/feedback",
    json={"doc_id": hit["doc_id"], "query": hit["queries"][0]},
).json()
view = client.post(f"/api/sessions/{sid}/generate", json={}).json()
gen2 = [q["text"] for q in view["generations"][-1]["queries"]]
print()
print(f"session {sid}: state={view['state']}, exemplars={len(view['prompt']['exemplars'])}")
print("feedback changed the generation:", gen1 != gen2)

# Errors map to stable statuses: 400 validation, 404 missing, 409 stale
# feedback, 502 backend failure.
print()
print("GET /api/search?q=        ->", client.get("/api/search", params={"q": ""}).status_code)
print("POST unknown doc          ->", client.post("/api/generate", json={"doc_id": "zz"}).status_code)
print(
    "stale feedback            ->",
    client.post(
        f"/api/sessions/{sid}/feedback", json={"doc_id": "zh-fire-04", "query": gen1[0]}
    ).status_code,
)
