import type { Api } from "../api";
import { ApiError } from "../api";
import { renderResults } from "./manual";

// Query-by-example tab: paste a document (or give a corpus doc id),
// generate candidate queries, edit them freely, then search with one or
// with all of them.  Searches use the edited text verbatim; regeneration
// replaces the list after confirmation.
export function initAutoTab(root: HTMLElement, client: Api): void {
  root.innerHTML = `
    <form class="generate-form">
      <input name="doc_id" type="text" placeholder="Corpus doc id (optional)" aria-label="Document id" />
      <textarea name="text" rows="4" placeholder="...or paste an example document" aria-label="Example document"></textarea>
      <button type="submit">Generate queries</button>
    </form>
    <p class="error" hidden></p>
    <div class="query-editor" hidden>
      <ul class="query-list"></ul>
      <button type="button" class="search-all">Search with all queries</button>
    </div>
    <div class="results-holder"></div>
  `;
  const form = root.querySelector<HTMLFormElement>(".generate-form")!;
  const error = root.querySelector<HTMLElement>(".error")!;
  const editor = root.querySelector<HTMLElement>(".query-editor")!;
  const list = root.querySelector<HTMLUListElement>(".query-list")!;
  const holder = root.querySelector<HTMLElement>(".results-holder")!;

  const showError = (exc: unknown) => {
    error.textContent = exc instanceof ApiError ? exc.message : String(exc);
    error.hidden = false;
  };

  const currentQueries = (): string[] =>
    Array.from(list.querySelectorAll<HTMLInputElement>("input")).map((i) => i.value);

  const searchOne = async (query: string) => {
    error.hidden = true;
    try {
      const response = await client.search(query);
      const section = document.createElement("section");
      const heading = document.createElement("h3");
      heading.textContent = `Results for "${query}"`;
      section.append(heading, renderResults(response.results));
      holder.appendChild(section);
    } catch (exc) {
      showError(exc);
    }
  };

  form.addEventListener("submit", async (event) => {
    event.preventDefault();
    const data = new FormData(form);
    const docId = String(data.get("doc_id") ?? "").trim();
    const text = String(data.get("text") ?? "").trim();
    if (list.children.length > 0 && !window.confirm("Regenerating discards your edits. Continue?")) {
      return;
    }
    error.hidden = true;
    try {
      const response = await client.generate(
        docId ? { doc_id: docId } : { text },
      );
      list.replaceChildren();
      holder.replaceChildren();
      for (const query of response.queries) {
        const item = document.createElement("li");
        const input = document.createElement("input");
        input.type = "text";
        input.value = query.text;
        const button = document.createElement("button");
        button.type = "button";
        button.textContent = "Search";
        button.addEventListener("click", () => {
          holder.replaceChildren();
          void searchOne(input.value);
        });
        item.append(input, button);
        list.appendChild(item);
      }
      editor.hidden = response.queries.length === 0;
    } catch (exc) {
      showError(exc);
    }
  });

  root.querySelector<HTMLButtonElement>(".search-all")!.addEventListener("click", async () => {
    holder.replaceChildren();
    for (const query of currentQueries()) {
      await searchOne(query);
    }
  });
}
