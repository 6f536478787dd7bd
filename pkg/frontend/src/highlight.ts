import type { HighlightSegment } from "./types";

// Render the server's highlight segments verbatim, in order.  Triggers and
// arguments get distinct classes (both when a segment carries both kinds);
// concatenated text content always equals the original document text.
export function renderSegments(segments: HighlightSegment[]): DocumentFragment {
  const fragment = document.createDocumentFragment();
  for (const segment of segments) {
    if (segment.kinds.length === 0) {
      fragment.appendChild(document.createTextNode(segment.text));
      continue;
    }
    const mark = document.createElement("mark");
    mark.textContent = segment.text;
    for (const kind of segment.kinds) {
      mark.classList.add(`hl-${kind}`);
    }
    mark.title = segment.kinds.join(" + ");
    fragment.appendChild(mark);
  }
  return fragment;
}
