"""
Corpus basics: ingest documents, attach offline translations and event
spans, and render span highlights.
=====================================================================

Run from the repository root:  python3 demos/01_corpus_and_highlighting.py
"""

from pathlib import Path

from queryforge import load_documents
from queryforge.corpus import highlight, load_annotations, load_translations

FIXTURES = Path(__file__).resolve().parent.parent / "fixtures"

# Ingest the bundled corpus: 12 documents across English, Arabic, Chinese.
store, report = load_documents(FIXTURES / "documents.jsonl")
print(f"ingested {report.accepted} documents, {len(report.diagnostics)} rejected")
print("languages:", store.languages())

# Translations and span annotations are produced offline and attached by id.
t_report = load_translations(store, FIXTURES / "translations.jsonl")
a_report = load_annotations(store, FIXTURES / "annotations.jsonl")
print(f"attached {t_report.accepted} translations, {a_report.accepted} annotation records")

# A document view bundles the original text, its translation (if any), and
# its event spans.
view = store.get_view("ar-flood-01")
print()
print("original:   ", view.document.text)
print("translation:", view.translation)
print("spans:      ", [(s.kind, s.label) for s in view.spans])

# highlight() cuts the text at span boundaries; overlapping spans merge
# their kind sets.  Render triggers as [..] and arguments as {..}.
view = store.get_view("en-flood-01")
rendered = []
for seg in highlight(view.document.text, view.spans):
    marked = seg.text
    if "trigger" in seg.kinds:
        marked = f"[{marked}]"
    if "argument" in seg.kinds:
        marked = f"{{{marked}}}"
    rendered.append(marked)
print()
print("".join(rendered))

# The segments always concatenate back to the exact original text.
assert "".join(s.text for s in highlight(view.document.text, view.spans)) == view.document.text
print()
print("round-trip OK")
