"""Command line entry points: ingest, index, serve, replay."""

from __future__ import annotations

import json
import sys
from pathlib import Path

import click

from . import corpus as corpus_mod
from .api import build_runtime, create_app_from_runtime
from .config import load_config
from .retrieval import build_index, save_index_cache
from .session import read_log


@click.group()
def main():
    """Multilingual query-by-example search and query generation service."""


@main.command()
@click.option("--documents", required=True, type=click.Path(exists=True))
@click.option("--translations", type=click.Path(exists=True))
@click.option("--annotations", type=click.Path(exists=True))
def ingest(documents: str, translations: str | None, annotations: str | None):
    """Validate corpus files and report what would be loaded."""
    store, report = corpus_mod.load_documents(documents)
    click.echo(f"documents: {report.accepted} accepted")
    diagnostics = list(report.diagnostics)
    if translations:
        t_report = corpus_mod.load_translations(store, translations)
        click.echo(f"translations: {t_report.accepted} attached")
        diagnostics += t_report.diagnostics
    if annotations:
        a_report = corpus_mod.load_annotations(store, annotations)
        click.echo(f"annotations: {a_report.accepted} records attached")
        diagnostics += a_report.diagnostics
    for line in diagnostics:
        click.echo(f"  ! {line}", err=True)
    if diagnostics:
        sys.exit(1)


@main.command()
@click.option("--config", "config_path", required=True, type=click.Path(exists=True))
@click.option("--cache", type=click.Path(), help="Write the built indices to a JSON cache file.")
def index(config_path: str, cache: str | None):
    """Build the per-language indices and print their statistics."""
    config = load_config(config_path)
    store, report = corpus_mod.load_documents(config.documents)
    if report.diagnostics:
        for line in report.diagnostics:
            click.echo(f"  ! {line}", err=True)
    indices = {lang: build_index(store.documents_for(lang)) for lang in store.languages()}
    for lang in sorted(indices):
        idx = indices[lang]
        click.echo(
            f"{lang}: {idx.doc_count} docs, {len(idx.postings)} terms, "
            f"avgdl {idx.avg_doc_length:.2f}"
        )
    if cache:
        save_index_cache(indices, cache)
        click.echo(f"cache written to {cache}")


@main.command()
@click.option("--config", "config_path", required=True, type=click.Path(exists=True))
@click.option("--host", default=None)
@click.option("--port", default=None, type=int)
def serve(config_path: str, host: str | None, port: int | None):
    """Start the HTTP service (ingest, build indices, listen)."""
    import uvicorn

    config = load_config(config_path)
    runtime = build_runtime(config)
    for name, report in runtime.reports.items():
        click.echo(f"{name}: {report.accepted} accepted, {len(report.diagnostics)} diagnostics")
    app = create_app_from_runtime(runtime)
    uvicorn.run(app, host=host or config.host, port=port or config.port)


@main.command()
@click.option("--config", "config_path", required=True, type=click.Path(exists=True))
@click.option("--log", "log_path", required=True, type=click.Path(exists=True))
def replay(config_path: str, log_path: str):
    """Rebuild a session from its event log and print the final view."""
    config = load_config(config_path)
    runtime = build_runtime(config)
    session = runtime.engine.replay(read_log(Path(log_path)))
    click.echo(json.dumps(session.view(), ensure_ascii=False, indent=2))


if __name__ == "__main__":
    main()
