"""The interactive loop: create a session around a target document, generate
candidate queries from the prompt, retrieve across languages, feed retrieved
documents back into the prompt, regenerate.

Every successful operation appends one event to the session's append-only
log; replaying a log through the same engine re-executes the operations and
reproduces the session byte-for-byte (given deterministic backends).  Failed
operations raise before any state is touched, so a session is never left
half-updated.

State machine: created -> generated -> retrieved, where generation is
allowed from any state (regeneration after feedback) and retrieval requires
at least one generation.
"""

from __future__ import annotations

import json
import threading
from dataclasses import dataclass, replace
from pathlib import Path
from typing import Any, Iterable, Mapping

from .config import Defaults
from .corpus import CorpusStore
from .errors import (
    NotFoundError,
    ReplayError,
    StaleFeedbackError,
    ValidationError,
)
from .fusion import rrf_fuse
from .promptkit import ExemplarPair, InstructionCatalog, Prompt
from .querygen import (
    GeneratedQuery,
    GenerationRequest,
    GeneratorBackend,
    MODE_FROM_PROMPT,
    generate,
)
from .retrieval import LanguageIndex, search

STATE_CREATED = "created"
STATE_GENERATED = "generated"
STATE_RETRIEVED = "retrieved"

EVENT_KINDS = ("create", "generate", "retrieve", "feedback", "prompt_edit")


@dataclass(frozen=True)
class Generation:
    generation_no: int
    backend_id: str
    queries: tuple[GeneratedQuery, ...]


@dataclass(frozen=True)
class RetrievedResult:
    doc_id: str
    score: float
    langs: frozenset[str]
    queries: tuple[str, ...]  # which of the searched queries matched this doc


@dataclass(frozen=True)
class RetrievalRecord:
    retrieval_no: int
    query_texts: tuple[str, ...]
    results: tuple[RetrievedResult, ...]


@dataclass(frozen=True)
class FeedbackEvent:
    doc_id: str
    query_text: str
    applied_at: int


@dataclass(frozen=True)
class Session:
    session_id: str
    target_doc_id: str
    prompt: Prompt
    generations: tuple[Generation, ...] = ()
    retrievals: tuple[RetrievalRecord, ...] = ()
    feedback_events: tuple[FeedbackEvent, ...] = ()
    state: str = STATE_CREATED

    @property
    def last_retrieval(self) -> RetrievalRecord | None:
        return self.retrievals[-1] if self.retrievals else None

    def to_dict(self) -> dict[str, Any]:
        """Full canonical dump; replay equality is asserted on this."""
        return {
            "session_id": self.session_id,
            "target_doc_id": self.target_doc_id,
            "state": self.state,
            "prompt": {
                "instruction": {
                    "id": self.prompt.instruction.id,
                    "text": self.prompt.instruction.text,
                },
                "exemplars": [
                    {
                        "document_text": pair.document_text,
                        "query_text": pair.query_text,
                        "origin": pair.origin,
                    }
                    for pair in self.prompt.exemplars
                ],
                "target_document_text": self.prompt.target_document_text,
            },
            "generations": [
                {
                    "generation_no": gen.generation_no,
                    "backend_id": gen.backend_id,
                    "queries": [
                        {"text": q.text, "backend_id": q.backend_id, "seq_no": q.seq_no}
                        for q in gen.queries
                    ],
                }
                for gen in self.generations
            ],
            "retrievals": [_retrieval_dict(rec) for rec in self.retrievals],
            "feedback_events": [
                {
                    "doc_id": ev.doc_id,
                    "query_text": ev.query_text,
                    "applied_at": ev.applied_at,
                }
                for ev in self.feedback_events
            ],
        }

    def view(self) -> dict[str, Any]:
        """The API's session view: full dump with only the last retrieval."""
        data = self.to_dict()
        retrievals = data.pop("retrievals")
        data["last_retrieval"] = retrievals[-1] if retrievals else None
        return data


def _retrieval_dict(rec: RetrievalRecord) -> dict[str, Any]:
    return {
        "retrieval_no": rec.retrieval_no,
        "query_texts": list(rec.query_texts),
        "results": [
            {
                "doc_id": r.doc_id,
                "score": r.score,
                "langs": sorted(r.langs),
                "queries": list(r.queries),
            }
            for r in rec.results
        ],
    }


@dataclass(frozen=True)
class LogEvent:
    seq: int
    kind: str
    payload: dict[str, Any]

    def to_dict(self) -> dict[str, Any]:
        return {"seq": self.seq, "kind": self.kind, "payload": self.payload}


class SessionEngine:
    """Owns live sessions, their logs, and the dependencies the loop needs.

    Operations on one session are serialized with a per-session lock;
    distinct sessions proceed concurrently.
    """

    def __init__(
        self,
        store: CorpusStore,
        indices: Mapping[str, LanguageIndex],
        backends: Mapping[str, GeneratorBackend],
        catalog: InstructionCatalog,
        default_exemplars: tuple[ExemplarPair, ...],
        defaults: Defaults | None = None,
    ):
        self.store = store
        self.indices = dict(indices)
        self.backends = dict(backends)
        self.catalog = catalog
        self.default_exemplars = tuple(default_exemplars)
        self.defaults = defaults or Defaults()
        self._sessions: dict[str, Session] = {}
        self._logs: dict[str, list[LogEvent]] = {}
        self._locks: dict[str, threading.Lock] = {}
        self._registry_lock = threading.Lock()
        self._counter = 0

    # -- lookup ------------------------------------------------------------

    def get(self, session_id: str) -> Session:
        try:
            return self._sessions[session_id]
        except KeyError:
            raise NotFoundError(f"unknown session {session_id!r}") from None

    def log_events(self, session_id: str) -> list[LogEvent]:
        self.get(session_id)
        return list(self._logs[session_id])

    def write_log(self, session_id: str, path: str | Path) -> None:
        events = self.log_events(session_id)
        with open(path, "w", encoding="utf-8") as fh:
            for event in events:
                fh.write(json.dumps(event.to_dict(), ensure_ascii=False) + "\n")

    def backend_ids(self) -> list[str]:
        return sorted(self.backends)

    # -- live operations ----------------------------------------------------

    def create_session(
        self, target_doc_id: str, instruction_id: str | None = None
    ) -> Session:
        with self._registry_lock:
            # validate before allocating an id, so failures consume nothing
            provisional = self._do_create("pending", target_doc_id, instruction_id)
            self._counter += 1
            session_id = f"s{self._counter}"
            session = replace(provisional, session_id=session_id)
            self._sessions[session_id] = session
            self._locks[session_id] = threading.Lock()
            self._logs[session_id] = [
                LogEvent(
                    seq=1,
                    kind="create",
                    payload={
                        "session_id": session_id,
                        "target_doc_id": target_doc_id,
                        "instruction_id": session.prompt.instruction.id,
                    },
                )
            ]
        return session

    def generate_queries(
        self, session_id: str, backend_id: str | None = None, n: int | None = None
    ) -> Session:
        backend_id = backend_id or "extractive"
        n = n if n is not None else self.defaults.n_queries
        with self._lock_for(session_id):
            session = self.get(session_id)
            updated = self._do_generate(session, backend_id, n)
            self._commit(updated, "generate", {"backend_id": backend_id, "n": n})
        return updated

    def retrieve(
        self, session_id: str, selection: Any = "all", k: int | None = None
    ) -> Session:
        k = k if k is not None else self.defaults.fused_top_k
        with self._lock_for(session_id):
            session = self.get(session_id)
            updated = self._do_retrieve(session, selection, k)
            self._commit(updated, "retrieve", {"selection": selection, "k": k})
        return updated

    def apply_feedback(self, session_id: str, doc_id: str, query_text: str) -> Session:
        with self._lock_for(session_id):
            session = self.get(session_id)
            updated = self._do_feedback(session, doc_id, query_text)
            self._commit(
                updated, "feedback", {"doc_id": doc_id, "query_text": query_text}
            )
        return updated

    def edit_prompt(self, session_id: str, action: dict[str, Any]) -> Session:
        with self._lock_for(session_id):
            session = self.get(session_id)
            updated = self._do_prompt_edit(session, action)
            self._commit(updated, "prompt_edit", dict(action))
        return updated

    def _lock_for(self, session_id: str) -> threading.Lock:
        self.get(session_id)
        return self._locks[session_id]

    def _commit(self, session: Session, kind: str, payload: dict[str, Any]) -> None:
        log = self._logs[session.session_id]
        log.append(LogEvent(seq=len(log) + 1, kind=kind, payload=payload))
        self._sessions[session.session_id] = session

    # -- the operations themselves (shared by live calls and replay) --------

    def _do_create(
        self, session_id: str, target_doc_id: str, instruction_id: str | None
    ) -> Session:
        doc = self.store.document(target_doc_id)
        instruction = (
            self.catalog.get(instruction_id)
            if instruction_id is not None
            else self.catalog.default()
        )
        prompt = Prompt(
            instruction=instruction,
            exemplars=self.default_exemplars,
            target_document_text=doc.text,
        )
        return Session(session_id=session_id, target_doc_id=target_doc_id, prompt=prompt)

    def _do_generate(self, session: Session, backend_id: str, n: int) -> Session:
        backend = self._backend(backend_id)
        req = GenerationRequest(
            mode=MODE_FROM_PROMPT, payload=session.prompt.render(), n=n
        )
        queries = generate(backend, req)  # BackendError propagates; session untouched
        gen = Generation(
            generation_no=len(session.generations) + 1,
            backend_id=backend.backend_id,
            queries=tuple(queries),
        )
        return replace(
            session,
            generations=session.generations + (gen,),
            state=STATE_GENERATED,
        )

    def _do_retrieve(self, session: Session, selection: Any, k: int) -> Session:
        if not session.generations:
            raise ValidationError("cannot retrieve before any generation")
        if not isinstance(k, int) or k < 1:
            raise ValidationError("k must be a positive integer")
        texts = self._select_queries(session, selection)
        lists = []
        matched_by: dict[str, list[str]] = {}
        for text in texts:
            for lang in sorted(self.indices):
                ranked = search(self.indices[lang], text, self.defaults.per_language_k)
                lists.append(ranked)
                for entry in ranked.entries:
                    hits = matched_by.setdefault(entry.doc_id, [])
                    if text not in hits:
                        hits.append(text)
        fused = rrf_fuse(lists, self.defaults.rrf_k_const, top_k=k)
        results = tuple(
            RetrievedResult(
                doc_id=e.doc_id,
                score=e.score,
                langs=e.langs,
                queries=tuple(matched_by[e.doc_id]),
            )
            for e in fused.entries
        )
        record = RetrievalRecord(
            retrieval_no=len(session.retrievals) + 1,
            query_texts=tuple(texts),
            results=results,
        )
        return replace(
            session,
            retrievals=session.retrievals + (record,),
            state=STATE_RETRIEVED,
        )

    def _select_queries(self, session: Session, selection: Any) -> list[str]:
        if selection == "all":
            return [q.text for q in session.generations[-1].queries]
        if isinstance(selection, dict) and set(selection) == {"generation", "query"}:
            gen_no = selection["generation"]
            q_idx = selection["query"]
            gen = next(
                (g for g in session.generations if g.generation_no == gen_no), None
            )
            if gen is None:
                raise ValidationError(f"no generation {gen_no!r}")
            if not isinstance(q_idx, int) or not 0 <= q_idx < len(gen.queries):
                raise ValidationError(f"query index {q_idx!r} out of range")
            return [gen.queries[q_idx].text]
        raise ValidationError(
            'selection must be "all" or {"generation": int, "query": int}'
        )

    def _do_feedback(self, session: Session, doc_id: str, query_text: str) -> Session:
        last = session.last_retrieval
        if last is None:
            raise StaleFeedbackError("no retrieval to take feedback from")
        if doc_id not in {r.doc_id for r in last.results}:
            raise StaleFeedbackError(
                f"document {doc_id!r} is not in the latest retrieval"
            )
        known = {q.text for gen in session.generations for q in gen.queries}
        if query_text not in known:
            raise ValidationError(f"query {query_text!r} was never generated here")
        doc = self.store.document(doc_id)
        prompt = session.prompt.add_feedback(doc.text, query_text)
        event = FeedbackEvent(
            doc_id=doc_id,
            query_text=query_text,
            applied_at=len(session.feedback_events) + 1,
        )
        return replace(
            session,
            prompt=prompt,
            feedback_events=session.feedback_events + (event,),
        )

    def _do_prompt_edit(self, session: Session, action: Mapping[str, Any]) -> Session:
        keys = set(action) & {"set_instruction", "edit", "reorder", "remove"}
        if len(keys) != 1:
            raise ValidationError(
                "prompt edit needs exactly one of set_instruction/edit/reorder/remove"
            )
        prompt = session.prompt
        if "set_instruction" in keys:
            instruction = self.catalog.get(action["set_instruction"])
            prompt = replace(prompt, instruction=instruction)
        elif "edit" in keys:
            spec = action["edit"]
            if not isinstance(spec, dict) or "index" not in spec:
                raise ValidationError('edit needs {"index": int, ...}')
            prompt = prompt.edit_exemplar(
                spec["index"],
                document_text=spec.get("document_text"),
                query_text=spec.get("query_text"),
            )
        elif "reorder" in keys:
            permutation = action["reorder"]
            if not isinstance(permutation, list):
                raise ValidationError("reorder needs a list of indices")
            prompt = prompt.reorder(permutation)
        else:
            spec = action["remove"]
            if not isinstance(spec, dict) or "index" not in spec:
                raise ValidationError('remove needs {"index": int}')
            prompt = prompt.remove_exemplar(spec["index"])
        return replace(session, prompt=prompt)

    def _backend(self, backend_id: str) -> GeneratorBackend:
        try:
            return self.backends[backend_id]
        except KeyError:
            raise ValidationError(f"unknown backend {backend_id!r}") from None

    # -- replay --------------------------------------------------------------

    def replay(self, events: Iterable[LogEvent | dict[str, Any]]) -> Session:
        """Re-execute a session log; the result matches the live session that
        produced it as long as the involved backends are deterministic.

        The replayed session is returned, not registered with the engine.
        """
        session: Session | None = None
        for index, raw in enumerate(events):
            event = self._coerce_event(index, raw)
            if event.seq != index + 1:
                raise ReplayError(index, f"expected seq {index + 1}, got {event.seq}")
            if index == 0 and event.kind != "create":
                raise ReplayError(index, "log must start with a create event")
            if index > 0 and event.kind == "create":
                raise ReplayError(index, "duplicate create event")
            try:
                session = self._replay_step(session, event)
            except ReplayError:
                raise
            except Exception as exc:
                raise ReplayError(index, str(exc)) from exc
        if session is None:
            raise ReplayError(0, "empty log")
        return session

    def _coerce_event(self, index: int, raw: LogEvent | dict[str, Any]) -> LogEvent:
        if isinstance(raw, LogEvent):
            return raw
        if not isinstance(raw, dict):
            raise ReplayError(index, "event must be an object")
        try:
            seq = raw["seq"]
            kind = raw["kind"]
            payload = raw["payload"]
        except KeyError as exc:
            raise ReplayError(index, f"event missing field {exc}") from None
        if kind not in EVENT_KINDS:
            raise ReplayError(index, f"unknown event kind {kind!r}")
        if not isinstance(payload, dict):
            raise ReplayError(index, "payload must be an object")
        return LogEvent(seq=seq, kind=kind, payload=payload)

    def _replay_step(self, session: Session | None, event: LogEvent) -> Session:
        payload = event.payload
        if event.kind == "create":
            return self._do_create(
                payload.get("session_id", "replayed"),
                payload["target_doc_id"],
                payload.get("instruction_id"),
            )
        if session is None:
            raise ValidationError("session not created yet")
        if event.kind == "generate":
            return self._do_generate(session, payload["backend_id"], payload["n"])
        if event.kind == "retrieve":
            return self._do_retrieve(session, payload["selection"], payload["k"])
        if event.kind == "feedback":
            return self._do_feedback(session, payload["doc_id"], payload["query_text"])
        return self._do_prompt_edit(session, payload)


def read_log(path: str | Path) -> list[dict[str, Any]]:
    """Read a JSON Lines session log into raw event dicts."""
    events = []
    with open(path, encoding="utf-8") as fh:
        for line in fh:
            if line.strip():
                events.append(json.loads(line))
    return events
