"""REST service over the whole system: search, generation, and sessions.

Startup order is ingest -> index build -> serve; the corpus and indices are
immutable once the app exists, so read endpoints are freely concurrent and
session operations rely on the engine's per-session locks.

Request/response bodies are plain JSON.  Error statuses are exactly:
400 validation, 404 unknown document/session, 409 stale feedback,
502 generator backend failure.  Everything else returns 200 with the body
shapes documented in the README.
"""

from __future__ import annotations

from dataclasses import dataclass
from typing import Any

from fastapi import Body, FastAPI, Request
from fastapi.responses import JSONResponse

from . import corpus as corpus_mod
from .config import ServiceConfig
from .corpus import CorpusStore, IngestReport, SUPPORTED_LANGS, highlight
from .errors import (
    BackendError,
    NotFoundError,
    StaleFeedbackError,
    ValidationError,
)
from .fusion import rrf_fuse
from .promptkit import InstructionCatalog
from .querygen import (
    ExtractiveBackend,
    GenerationRequest,
    GeneratorBackend,
    MODE_FROM_DOCUMENT,
    RemoteBackend,
    generate,
)
from .retrieval import LanguageIndex, build_index, search
from .session import SessionEngine


@dataclass
class Runtime:
    """Everything a running service holds after startup."""

    config: ServiceConfig
    store: CorpusStore
    indices: dict[str, LanguageIndex]
    engine: SessionEngine
    reports: dict[str, IngestReport]


def build_runtime(config: ServiceConfig) -> Runtime:
    """Ingest the corpus, build one index per language, wire the backends."""
    store, doc_report = corpus_mod.load_documents(config.documents)
    reports = {"documents": doc_report}
    if config.translations is not None:
        reports["translations"] = corpus_mod.load_translations(store, config.translations)
    if config.annotations is not None:
        reports["annotations"] = corpus_mod.load_annotations(store, config.annotations)

    indices = {
        lang: build_index(store.documents_for(lang)) for lang in store.languages()
    }

    backends: dict[str, GeneratorBackend] = {
        "extractive": ExtractiveBackend(indices)
    }
    for spec in config.backends:
        if spec.backend_id == "extractive":
            continue
        if spec.kind == "remote":
            backends[spec.backend_id] = RemoteBackend(spec.backend_id, spec.endpoint)
        else:
            backends[spec.backend_id] = ExtractiveBackend(
                indices, backend_id=spec.backend_id
            )

    catalog = (
        InstructionCatalog.from_file(config.instructions)
        if config.instructions is not None
        else InstructionCatalog()
    )
    engine = SessionEngine(
        store=store,
        indices=indices,
        backends=backends,
        catalog=catalog,
        default_exemplars=config.default_exemplars,
        defaults=config.defaults,
    )
    return Runtime(
        config=config, store=store, indices=indices, engine=engine, reports=reports
    )


def create_app(config: ServiceConfig) -> FastAPI:
    runtime = build_runtime(config)
    return create_app_from_runtime(runtime)


def create_app_from_runtime(runtime: Runtime) -> FastAPI:
    app = FastAPI(title="queryforge", docs_url=None, redoc_url=None)
    app.state.runtime = runtime
    engine = runtime.engine
    defaults = runtime.config.defaults

    def error_handler(status: int):
        def handle(request: Request, exc: Exception) -> JSONResponse:
            return JSONResponse({"detail": str(exc)}, status_code=status)

        return handle

    app.add_exception_handler(ValidationError, error_handler(400))
    app.add_exception_handler(NotFoundError, error_handler(404))
    app.add_exception_handler(StaleFeedbackError, error_handler(409))
    app.add_exception_handler(BackendError, error_handler(502))

    # -- plain search and generation ----------------------------------------

    @app.get("/api/health")
    def health() -> dict[str, Any]:
        return {
            "status": "ok",
            "languages": sorted(runtime.indices),
            "backends": engine.backend_ids(),
        }

    @app.get("/api/search")
    def api_search(
        q: str = "", k: str | None = None, langs: str | None = None
    ) -> dict[str, Any]:
        query = q.strip()
        if not query:
            raise ValidationError("q must be non-empty")
        top_k = _parse_positive_int(k, "k") if k is not None else defaults.fused_top_k
        if langs is None:
            selected = sorted(runtime.indices)
        else:
            selected = [part.strip() for part in langs.split(",") if part.strip()]
            for lang in selected:
                if lang not in SUPPORTED_LANGS:
                    raise ValidationError(f"unknown lang code {lang!r}")
        lists = [
            search(runtime.indices[lang], query, defaults.per_language_k)
            for lang in selected
            if lang in runtime.indices
        ]
        fused = rrf_fuse(lists, defaults.rrf_k_const, top_k=top_k)
        results = []
        for entry in fused.entries:
            view = runtime.store.get_view(entry.doc_id)
            segments = highlight(view.document.text, view.spans)
            results.append(
                {
                    "doc_id": entry.doc_id,
                    "lang": view.document.lang,
                    "score": entry.score,
                    "text": view.document.text,
                    "translation": view.translation,
                    "segments": [
                        {"text": seg.text, "kinds": sorted(seg.kinds)}
                        for seg in segments
                    ],
                }
            )
        return {"results": results}

    @app.post("/api/generate")
    def api_generate(body: dict[str, Any] = Body(default_factory=dict)) -> dict[str, Any]:
        doc_id = body.get("doc_id")
        text = body.get("text")
        if (doc_id is None) == (text is None):
            raise ValidationError("provide exactly one of doc_id or text")
        backend_id = body.get("backend_id", "extractive")
        backend = _backend_or_400(engine, backend_id)
        n = body.get("n", defaults.n_queries)
        if doc_id is not None:
            doc = runtime.store.document(doc_id)
            payload, lang = doc.text, doc.lang
        else:
            if not isinstance(text, str) or not text.strip():
                raise ValidationError("text must be a non-empty string")
            payload, lang = text, None
        req = GenerationRequest(mode=MODE_FROM_DOCUMENT, payload=payload, n=n, lang=lang)
        queries = generate(backend, req)
        return {
            "queries": [
                {"text": query.text, "backend_id": query.backend_id, "seq_no": query.seq_no}
                for query in queries
            ]
        }

    # -- sessions -------------------------------------------------------------

    @app.get("/api/instructions")
    def api_instructions() -> dict[str, Any]:
        return {
            "instructions": [
                {"id": ins.id, "text": ins.text}
                for ins in engine.catalog.instructions
            ]
        }

    @app.post("/api/sessions")
    def api_create_session(
        body: dict[str, Any] = Body(default_factory=dict)
    ) -> dict[str, Any]:
        doc_id = body.get("doc_id")
        if not isinstance(doc_id, str) or not doc_id:
            raise ValidationError("doc_id must be a non-empty string")
        session = engine.create_session(doc_id, body.get("instruction_id"))
        return session.view()

    @app.get("/api/sessions/{session_id}")
    def api_get_session(session_id: str) -> dict[str, Any]:
        return engine.get(session_id).view()

    @app.post("/api/sessions/{session_id}/generate")
    def api_session_generate(
        session_id: str, body: dict[str, Any] = Body(default_factory=dict)
    ) -> dict[str, Any]:
        session = engine.generate_queries(
            session_id, body.get("backend_id"), body.get("n")
        )
        return session.view()

    @app.post("/api/sessions/{session_id}/retrieve")
    def api_session_retrieve(
        session_id: str, body: dict[str, Any] = Body(default_factory=dict)
    ) -> dict[str, Any]:
        session = engine.retrieve(
            session_id, body.get("selection", "all"), body.get("k")
        )
        return session.view()

    @app.post("/api/sessions/{session_id}/feedback")
    def api_session_feedback(
        session_id: str, body: dict[str, Any] = Body(default_factory=dict)
    ) -> dict[str, Any]:
        doc_id = body.get("doc_id")
        query = body.get("query")
        if not isinstance(doc_id, str) or not isinstance(query, str):
            raise ValidationError("feedback needs string doc_id and query")
        session = engine.apply_feedback(session_id, doc_id, query)
        return session.view()

    @app.patch("/api/sessions/{session_id}/prompt")
    def api_session_prompt(
        session_id: str, body: dict[str, Any] = Body(default_factory=dict)
    ) -> dict[str, Any]:
        action = dict(body)
        if "instruction_id" in action:
            action["set_instruction"] = action.pop("instruction_id")
        session = engine.edit_prompt(session_id, action)
        return session.view()

    _maybe_mount_ui(app, runtime)
    return app


def _parse_positive_int(raw: str, name: str) -> int:
    try:
        value = int(raw)
    except (TypeError, ValueError):
        raise ValidationError(f"{name} must be a positive integer") from None
    if value < 1:
        raise ValidationError(f"{name} must be a positive integer")
    return value


def _backend_or_400(engine: SessionEngine, backend_id: Any) -> GeneratorBackend:
    if not isinstance(backend_id, str) or backend_id not in engine.backends:
        raise ValidationError(f"unknown backend {backend_id!r}")
    return engine.backends[backend_id]


def _maybe_mount_ui(app: FastAPI, runtime: Runtime) -> None:
    ui_dir = runtime.config.ui_dir
    if ui_dir is None or not ui_dir.is_dir():
        return
    from fastapi.staticfiles import StaticFiles

    app.mount("/ui", StaticFiles(directory=str(ui_dir), html=True), name="ui")
