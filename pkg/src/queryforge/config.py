"""Service configuration: one JSON document mirroring everything the service
needs to start (corpus files, instruction catalog, backend registry, default
knobs, bind address).

Relative paths are resolved against the config file's own directory so a
checked-in config works from any working directory.  The extractive backend
is always registered under the id "extractive", whether or not the file
lists it.
"""

from __future__ import annotations

import json
from dataclasses import dataclass, field
from pathlib import Path
from typing import Any

from .errors import ValidationError
from .promptkit import DEFAULT_EXEMPLARS, ExemplarPair, ORIGIN_DEFAULT

BACKEND_KINDS = ("extractive", "remote")


@dataclass(frozen=True)
class BackendSpec:
    backend_id: str
    kind: str
    endpoint: str | None = None

    def __post_init__(self):
        if not self.backend_id:
            raise ValidationError("backend_id must be non-empty")
        if self.kind not in BACKEND_KINDS:
            raise ValidationError(f"unknown backend kind {self.kind!r}")
        if self.kind == "remote" and not self.endpoint:
            raise ValidationError(
                f"remote backend {self.backend_id!r} needs an endpoint"
            )


@dataclass(frozen=True)
class Defaults:
    n_queries: int = 5
    per_language_k: int = 100
    fused_top_k: int = 20
    rrf_k_const: int = 60


@dataclass(frozen=True)
class ServiceConfig:
    documents: Path
    translations: Path | None = None
    annotations: Path | None = None
    instructions: Path | None = None
    default_exemplars: tuple[ExemplarPair, ...] = DEFAULT_EXEMPLARS
    backends: tuple[BackendSpec, ...] = ()
    defaults: Defaults = field(default_factory=Defaults)
    host: str = "127.0.0.1"
    port: int = 8000
    ui_dir: Path | None = None

    def __post_init__(self):
        # "extractive" is auto-registered, so at least one backend always exists.
        listed = [b.backend_id for b in self.backends]
        if len(set(listed)) != len(listed):
            raise ValidationError("backend ids must be unique")
        for spec in self.backends:
            if spec.backend_id == "extractive" and spec.kind != "extractive":
                raise ValidationError('the id "extractive" is reserved')


def load_config(path: str | Path) -> ServiceConfig:
    path = Path(path)
    data = json.loads(path.read_text(encoding="utf-8"))
    return config_from_dict(data, base_dir=path.parent)


def config_from_dict(data: dict[str, Any], base_dir: str | Path = ".") -> ServiceConfig:
    base = Path(base_dir)

    def resolve(key: str) -> Path | None:
        value = data.get(key)
        if value is None:
            return None
        return base / value

    documents = resolve("documents")
    if documents is None:
        raise ValidationError('config needs a "documents" path')

    exemplars = DEFAULT_EXEMPLARS
    if "default_exemplars" in data:
        exemplars = tuple(
            ExemplarPair(item["document_text"], item["query_text"], ORIGIN_DEFAULT)
            for item in data["default_exemplars"]
        )

    backends = tuple(
        BackendSpec(
            backend_id=item.get("backend_id", ""),
            kind=item.get("kind", ""),
            endpoint=item.get("endpoint"),
        )
        for item in data.get("backends", [])
    )

    defaults_raw = data.get("defaults", {})
    unknown = set(defaults_raw) - {
        "n_queries",
        "per_language_k",
        "fused_top_k",
        "rrf_k_const",
    }
    if unknown:
        raise ValidationError(f"unknown defaults: {sorted(unknown)}")
    defaults = Defaults(**defaults_raw)

    bind = data.get("bind", {})
    return ServiceConfig(
        documents=documents,
        translations=resolve("translations"),
        annotations=resolve("annotations"),
        instructions=resolve("instructions"),
        default_exemplars=exemplars,
        backends=backends,
        defaults=defaults,
        host=bind.get("host", "127.0.0.1"),
        port=bind.get("port", 8000),
        ui_dir=resolve("ui_dir"),
    )
