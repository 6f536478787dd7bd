from __future__ import annotations

import json
import random

import pytest

from queryforge.errors import ValidationError
from queryforge.promptkit import (
    DEFAULT_INSTRUCTIONS,
    ExemplarPair,
    Instruction,
    InstructionCatalog,
    ORIGIN_DEFAULT,
    ORIGIN_FEEDBACK,
    ORIGIN_MANUAL,
    Prompt,
    parse_rendered_prompt,
)

from conftest import check_golden

INSTRUCTION = Instruction("i1", "Generate a search query for the following document:")


def _prompt(n_exemplars: int, target="A town flooded after days of rain.") -> Prompt:
    pairs = tuple(
        ExemplarPair(f"Example document {i}.", f"example query {i}", ORIGIN_DEFAULT)
        for i in range(1, n_exemplars + 1)
    )
    return Prompt(INSTRUCTION, pairs, target)


# -- render -------------------------------------------------------------------


def test_render_zero_exemplars():
    prompt = Prompt(Instruction("i1", "I."), (), "T")
    assert prompt.render() == "I.\n\nDocument: T\nQuery:"


def test_render_one_exemplar():
    prompt = Prompt(
        Instruction("i1", "I."), (ExemplarPair("D1", "Q1", ORIGIN_DEFAULT),), "T"
    )
    assert prompt.render() == "I.\n\nDocument: D1\nQuery: Q1\n\nDocument: T\nQuery:"


def test_render_two_exemplars_in_order():
    prompt = Prompt(
        Instruction("i1", "I."),
        (ExemplarPair("D1", "Q1", ORIGIN_DEFAULT), ExemplarPair("D2", "Q2", ORIGIN_DEFAULT)),
        "T",
    )
    rendered = prompt.render()
    assert rendered == (
        "I.\n\nDocument: D1\nQuery: Q1\n\nDocument: D2\nQuery: Q2\n\nDocument: T\nQuery:"
    )
    assert not rendered.endswith("\n")


def test_render_golden_files():
    check_golden("prompt_zero_exemplars.txt", _prompt(0).render())
    check_golden("prompt_one_exemplar.txt", _prompt(1).render())
    check_golden("prompt_two_exemplars.txt", _prompt(2).render())


def test_feedback_extends_render_by_one_block():
    before = _prompt(2)
    after = before.add_feedback("Retrieved doc text.", "retrieved query")
    check_golden("prompt_after_feedback.txt", after.render())
    tail = "Document: " + before.target_document_text + "\nQuery:"
    rendered_before = before.render()
    rendered_after = after.render()
    assert rendered_before.endswith(tail)
    inserted = "Document: Retrieved doc text.\nQuery: retrieved query\n\n"
    assert rendered_after == rendered_before[: -len(tail)] + inserted + tail
    assert len(rendered_after) > len(rendered_before)


# -- add_feedback ----------------------------------------------------------------


def test_add_feedback_appends_at_end():
    prompt = _prompt(2).add_feedback("FD", "FQ")
    assert len(prompt.exemplars) == 3
    assert prompt.exemplars[-1] == ExemplarPair("FD", "FQ", ORIGIN_FEEDBACK)
    assert prompt.exemplars[:2] == _prompt(2).exemplars


def test_add_feedback_allows_duplicates():
    prompt = _prompt(2).add_feedback("FD", "FQ").add_feedback("FD", "FQ")
    assert len(prompt.exemplars) == 4


def test_add_feedback_rejects_empty_texts():
    with pytest.raises(ValidationError):
        _prompt(1).add_feedback("", "q")
    with pytest.raises(ValidationError):
        _prompt(1).add_feedback("d", "")


# -- edit / reorder / remove -------------------------------------------------------


def test_edit_exemplar_changes_only_addressed_field():
    prompt = _prompt(2).edit_exemplar(0, query_text="new query")
    assert prompt.exemplars[0].document_text == "Example document 1."
    assert prompt.exemplars[0].query_text == "new query"
    assert prompt.exemplars[0].origin == ORIGIN_MANUAL
    assert prompt.exemplars[1] == _prompt(2).exemplars[1]


def test_edit_exemplar_index_out_of_range():
    with pytest.raises(ValidationError):
        _prompt(2).edit_exemplar(2, query_text="x")


def test_edit_exemplar_no_fields_still_marks_manual():
    prompt = _prompt(2).edit_exemplar(1)
    assert prompt.exemplars[1].document_text == "Example document 2."
    assert prompt.exemplars[1].query_text == "example query 2"
    assert prompt.exemplars[1].origin == ORIGIN_MANUAL


def test_reorder_swaps():
    prompt = _prompt(2).reorder([1, 0])
    assert [p.document_text for p in prompt.exemplars] == [
        "Example document 2.",
        "Example document 1.",
    ]


def test_reorder_identity():
    assert _prompt(2).reorder([0, 1]) == _prompt(2)


def test_reorder_rejects_non_bijections():
    with pytest.raises(ValidationError):
        _prompt(2).reorder([0, 0])
    with pytest.raises(ValidationError):
        _prompt(2).reorder([0])
    with pytest.raises(ValidationError):
        _prompt(2).reorder([0, 1, 2])


def test_reorder_round_trip_with_inverse():
    rng = random.Random(8812)
    for _ in range(30):
        n = rng.randint(0, 6)
        prompt = _prompt(n)
        permutation = list(range(n))
        rng.shuffle(permutation)
        inverse = [0] * n
        for i, j in enumerate(permutation):
            inverse[j] = i
        assert prompt.reorder(permutation).reorder(inverse) == prompt


def test_remove_exemplar():
    prompt = _prompt(2).remove_exemplar(0)
    assert [p.document_text for p in prompt.exemplars] == ["Example document 2."]


def test_remove_only_exemplar_leaves_valid_prompt():
    prompt = _prompt(1).remove_exemplar(0)
    assert prompt.exemplars == ()
    assert prompt.render().startswith(INSTRUCTION.text)


def test_remove_out_of_range():
    with pytest.raises(ValidationError):
        _prompt(2).remove_exemplar(5)


def test_operations_never_mutate_the_input():
    prompt = _prompt(2)
    prompt.add_feedback("d", "q")
    prompt.edit_exemplar(0, query_text="x")
    prompt.reorder([1, 0])
    prompt.remove_exemplar(0)
    assert prompt == _prompt(2)


def test_render_distinguishes_exemplar_orders():
    rng = random.Random(3141)
    for _ in range(30):
        n = rng.randint(2, 5)
        pairs = [
            ExemplarPair(f"doc {rng.randint(0, 99)}", f"query {i}", ORIGIN_DEFAULT)
            for i in range(n)
        ]
        prompt = Prompt(INSTRUCTION, tuple(pairs), "T")
        permutation = list(range(n))
        rng.shuffle(permutation)
        reordered = prompt.reorder(permutation)
        if reordered.exemplars != prompt.exemplars:
            assert reordered.render() != prompt.render()
        else:
            assert reordered.render() == prompt.render()


# -- parsing ------------------------------------------------------------------------


def test_parse_rendered_prompt_round_trip():
    prompt = _prompt(2)
    target, queries = parse_rendered_prompt(prompt.render())
    assert target == prompt.target_document_text
    assert queries == ["example query 1", "example query 2"]


def test_parse_rendered_prompt_zero_exemplars():
    target, queries = parse_rendered_prompt(_prompt(0).render())
    assert target == _prompt(0).target_document_text
    assert queries == []


def test_parse_non_prompt_payload_is_bare_target():
    target, queries = parse_rendered_prompt("just some raw text")
    assert target == "just some raw text"
    assert queries == []


# -- catalog --------------------------------------------------------------------------


def test_catalog_defaults():
    catalog = InstructionCatalog()
    assert catalog.default().id == "i1"
    assert [i.id for i in catalog.instructions] == ["i1", "i2", "i3"]
    assert catalog.instructions == DEFAULT_INSTRUCTIONS


def test_catalog_get_unknown():
    with pytest.raises(ValidationError):
        InstructionCatalog().get("nope")


def test_catalog_rejects_duplicate_ids():
    with pytest.raises(ValidationError):
        InstructionCatalog((Instruction("a", "x"), Instruction("a", "y")))


def test_catalog_from_file(tmp_path):
    path = tmp_path / "instructions.json"
    path.write_text(json.dumps([{"id": "z1", "text": "Do the thing:"}]), encoding="utf-8")
    catalog = InstructionCatalog.from_file(path)
    assert catalog.default() == Instruction("z1", "Do the thing:")
