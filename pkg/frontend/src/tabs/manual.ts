import type { Api } from "../api";
import { ApiError } from "../api";
import { renderSegments } from "../highlight";
import type { SearchResult } from "../types";

// One result card: highlighted original text, translation (or fallback to
// the original), language and score badges.
export function renderResultCard(result: SearchResult): HTMLElement {
  const card = document.createElement("article");
  card.className = "result-card";
  card.dataset.docId = result.doc_id;

  const header = document.createElement("header");
  const id = document.createElement("span");
  id.className = "result-id";
  id.textContent = result.doc_id;
  const lang = document.createElement("span");
  lang.className = "badge badge-lang";
  lang.textContent = result.lang;
  const score = document.createElement("span");
  score.className = "result-score";
  score.textContent = result.score.toFixed(5);
  header.append(id, lang, score);

  const original = document.createElement("p");
  original.className = "result-text";
  original.appendChild(renderSegments(result.segments));

  const translation = document.createElement("p");
  translation.className = "result-translation";
  translation.textContent = result.translation ?? result.text;

  card.append(header, original, translation);
  return card;
}

export function renderResults(results: SearchResult[]): HTMLElement {
  const list = document.createElement("div");
  list.className = "result-list";
  if (results.length === 0) {
    const empty = document.createElement("p");
    empty.className = "empty-state";
    empty.textContent = "No results.";
    list.appendChild(empty);
    return list;
  }
  for (const result of results) {
    list.appendChild(renderResultCard(result));
  }
  return list;
}

export function initManualTab(root: HTMLElement, client: Api): void {
  root.innerHTML = `
    <form class="search-form">
      <input name="q" type="text" placeholder="Search query" aria-label="Search query" />
      <input name="langs" type="text" placeholder="Languages (e.g. en,ar,zh; empty = all)" aria-label="Languages" />
      <button type="submit">Search</button>
    </form>
    <p class="error" hidden></p>
    <div class="results-holder"></div>
  `;
  const form = root.querySelector<HTMLFormElement>(".search-form")!;
  const error = root.querySelector<HTMLElement>(".error")!;
  const holder = root.querySelector<HTMLElement>(".results-holder")!;

  form.addEventListener("submit", async (event) => {
    event.preventDefault();
    const data = new FormData(form);
    const q = String(data.get("q") ?? "");
    const langsRaw = String(data.get("langs") ?? "").trim();
    const langs = langsRaw ? langsRaw.split(",").map((s) => s.trim()) : undefined;
    error.hidden = true;
    try {
      const response = await client.search(q, langs);
      holder.replaceChildren(renderResults(response.results));
    } catch (exc) {
      // inputs stay as typed; the error shows inline
      error.textContent = exc instanceof ApiError ? exc.message : String(exc);
      error.hidden = false;
    }
  });
}
