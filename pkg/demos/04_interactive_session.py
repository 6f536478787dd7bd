"""
The interactive loop: generate queries from an editable few-shot prompt,
retrieve across languages, feed a retrieved document back into the prompt,
and watch the next generation change.  Every step lands in a replayable
event log.
==========================================================================

Run from the repository root:  python3 demos/04_interactive_session.py
"""

from pathlib import Path

from queryforge import load_config
from queryforge.api import build_runtime

FIXTURES = Path(__file__).resolve().parent.parent / "fixtures"

runtime = build_runtime(load_config(FIXTURES / "config.json"))
engine = runtime.engine

# A session wraps a target document in a prompt with two default
# (document, query) exemplar pairs and an instruction.
session = engine.create_session("en-flood-01")
sid = session.session_id
print("prompt as the generator sees it:")
print("-" * 60)
print(session.prompt.render())
print("-" * 60)

# First generation, from the rendered prompt.
session = engine.generate_queries(sid)
gen1 = [q.text for q in session.generations[-1].queries]
print()
print("generation 1:")
for text in gen1:
    print("  ", text)

# Retrieve with all generated queries at once: every query is searched in
# every language index and all the rank lists are fused in one pass.
session = engine.retrieve(sid, "all")
print()
print("retrieved:")
for result in session.last_retrieval.results:
    print(f"  {result.doc_id:14s} rrf {result.score:.5f} via {len(result.queries)} queries")

# Feed a retrieved document back into the prompt, paired with the query
# that surfaced it.  The prompt gains a feedback exemplar at the end.
hit = next(r for r in session.last_retrieval.results if r.doc_id != session.target_doc_id)
session = engine.apply_feedback(sid, hit.doc_id, hit.queries[0])
print()
print(f"fed back {hit.doc_id} with query {hit.queries[0]!r}")
print("exemplar origins now:", [p.origin for p in session.prompt.exemplars])

# The feedback exemplar's query terms get boosted, so regeneration differs.
session = engine.generate_queries(sid)
gen2 = [q.text for q in session.generations[-1].queries]
print()
print("generation 2 (after feedback):")
for text in gen2:
    marker = "*" if text not in gen1 else " "
    print(f"  {marker} {text}")
assert gen2 != gen1

# Remove the feedback exemplar and the original generation comes back.
session = engine.edit_prompt(sid, {"remove": {"index": len(session.prompt.exemplars) - 1}})
session = engine.generate_queries(sid)
assert [q.text for q in session.generations[-1].queries] == gen1
print()
print("removing the feedback exemplar restores generation 1 exactly")

# The whole history is an event log; replaying it rebuilds the session.
log = [event.to_dict() for event in engine.log_events(sid)]
print()
print("event log:", [event["kind"] for event in log])
replayed = engine.replay(log)
assert replayed.to_dict() == engine.get(sid).to_dict()
print("replay reproduces the live session")
