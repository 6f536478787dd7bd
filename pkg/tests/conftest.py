from __future__ import annotations

import os
from pathlib import Path

import pytest

from queryforge.api import build_runtime
from queryforge.config import load_config

FIXTURES = Path(__file__).resolve().parent.parent / "fixtures"
GOLDEN_DIR = Path(__file__).resolve().parent / "golden"

REGEN_GOLDENS = os.environ.get("QUERYFORGE_REGEN_GOLDENS") == "1"


@pytest.fixture(scope="session")
def fixtures_dir() -> Path:
    return FIXTURES


@pytest.fixture()
def runtime():
    """Fresh runtime per test: session state lives on the engine."""
    return build_runtime(load_config(FIXTURES / "config.json"))


@pytest.fixture()
def engine(runtime):
    return runtime.engine


def check_golden(name: str, content: str) -> None:
    """Compare content against a checked-in golden file byte for byte.

    Set QUERYFORGE_REGEN_GOLDENS=1 to rewrite the goldens instead.
    """
    path = GOLDEN_DIR / name
    if REGEN_GOLDENS:
        GOLDEN_DIR.mkdir(exist_ok=True)
        path.write_text(content, encoding="utf-8")
    assert path.read_text(encoding="utf-8") == content, f"golden mismatch: {name}"
