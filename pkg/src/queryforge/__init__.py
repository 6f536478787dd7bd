"""queryforge: multilingual query-by-example search with interactive,
feedback-driven query generation.

The pieces compose bottom-up: a document store with translations and event
spans (`corpus`), per-language BM25 indices (`retrieval`), reciprocal rank
fusion across languages (`fusion`), pluggable query generators (`querygen`),
editable few-shot prompts (`promptkit`), the interactive session loop with a
replayable log (`session`), and a REST service plus CLI on top (`api`,
`cli`).
"""

from .config import BackendSpec, Defaults, ServiceConfig, config_from_dict, load_config
from .corpus import (
    CorpusStore,
    Document,
    DocumentView,
    EventSpan,
    HighlightSegment,
    attach_annotations,
    attach_translations,
    highlight,
    ingest_documents,
    load_documents,
)
from .errors import (
    BackendError,
    EmptyIndexError,
    NotFoundError,
    QueryForgeError,
    ReplayError,
    StaleFeedbackError,
    ValidationError,
)
from .fusion import FusedEntry, FusedRanking, rrf_fuse
from .promptkit import (
    DEFAULT_EXEMPLARS,
    DEFAULT_INSTRUCTIONS,
    ExemplarPair,
    Instruction,
    InstructionCatalog,
    Prompt,
)
from .querygen import (
    ExtractiveBackend,
    GeneratedQuery,
    GenerationRequest,
    GeneratorBackend,
    RemoteBackend,
    dedup_queries,
    generate,
    rank_terms,
)
from .retrieval import LanguageIndex, RankedList, RankEntry, build_index, search, tokenize
from .session import Session, SessionEngine, read_log

__version__ = "0.1.0"

__all__ = [
    "BackendError",
    "BackendSpec",
    "CorpusStore",
    "DEFAULT_EXEMPLARS",
    "DEFAULT_INSTRUCTIONS",
    "Defaults",
    "Document",
    "DocumentView",
    "EmptyIndexError",
    "EventSpan",
    "ExemplarPair",
    "ExtractiveBackend",
    "FusedEntry",
    "FusedRanking",
    "GeneratedQuery",
    "GenerationRequest",
    "GeneratorBackend",
    "HighlightSegment",
    "Instruction",
    "InstructionCatalog",
    "LanguageIndex",
    "NotFoundError",
    "Prompt",
    "QueryForgeError",
    "RankEntry",
    "RankedList",
    "RemoteBackend",
    "ReplayError",
    "ServiceConfig",
    "Session",
    "SessionEngine",
    "StaleFeedbackError",
    "ValidationError",
    "attach_annotations",
    "attach_translations",
    "build_index",
    "config_from_dict",
    "dedup_queries",
    "generate",
    "highlight",
    "ingest_documents",
    "load_config",
    "load_documents",
    "rank_terms",
    "read_log",
    "rrf_fuse",
    "search",
    "tokenize",
]
