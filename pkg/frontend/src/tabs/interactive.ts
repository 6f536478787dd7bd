import type { Api } from "../api";
import { ApiError } from "../api";
import { diffQuerySets, renderQueryDiff } from "../diff";
import type { Instruction, PromptPatch, SessionView } from "../types";

// Interactive prompt tab.  All domain state lives on the server: every
// mutation round-trips through the API and the whole panel re-renders from
// the returned session view.  The only client state is which result
// checkboxes are ticked and which query is chosen per result.

interface Handlers {
  patchPrompt(patch: PromptPatch): void;
  feedback(docId: string, query: string): void;
}

export function renderExemplarList(view: SessionView, handlers: Handlers): HTMLElement {
  const container = document.createElement("div");
  container.className = "exemplar-list";
  const pairs = view.prompt.exemplars;
  pairs.forEach((pair, index) => {
    const row = document.createElement("div");
    row.className = "exemplar";
    row.dataset.index = String(index);

    const head = document.createElement("div");
    head.className = "exemplar-head";
    const label = document.createElement("span");
    label.textContent = `Exemplar ${index + 1}`;
    const badge = document.createElement("span");
    badge.className = `badge badge-origin badge-${pair.origin}`;
    badge.textContent = pair.origin;
    head.append(label, badge);

    const docInput = document.createElement("textarea");
    docInput.className = "exemplar-doc";
    docInput.value = pair.document_text;
    const queryInput = document.createElement("input");
    queryInput.className = "exemplar-query";
    queryInput.value = pair.query_text;

    const controls = document.createElement("div");
    controls.className = "exemplar-controls";
    const save = document.createElement("button");
    save.type = "button";
    save.textContent = "Save";
    save.addEventListener("click", () =>
      handlers.patchPrompt({
        edit: { index, document_text: docInput.value, query_text: queryInput.value },
      }),
    );
    const up = document.createElement("button");
    up.type = "button";
    up.textContent = "↑";
    up.disabled = index === 0;
    up.addEventListener("click", () =>
      handlers.patchPrompt({ reorder: swapPermutation(pairs.length, index - 1, index) }),
    );
    const down = document.createElement("button");
    down.type = "button";
    down.textContent = "↓";
    down.disabled = index === pairs.length - 1;
    down.addEventListener("click", () =>
      handlers.patchPrompt({ reorder: swapPermutation(pairs.length, index, index + 1) }),
    );
    const remove = document.createElement("button");
    remove.type = "button";
    remove.textContent = "Remove";
    remove.addEventListener("click", () => handlers.patchPrompt({ remove: { index } }));
    controls.append(save, up, down, remove);

    row.append(head, docInput, queryInput, controls);
    container.appendChild(row);
  });
  return container;
}

function swapPermutation(length: number, a: number, b: number): number[] {
  const permutation = Array.from({ length }, (_, i) => i);
  [permutation[a], permutation[b]] = [permutation[b], permutation[a]];
  return permutation;
}

export function renderGenerationPanel(view: SessionView): HTMLElement {
  const panel = document.createElement("div");
  panel.className = "generation-panel";
  const count = view.generations.length;
  if (count === 0) {
    const empty = document.createElement("p");
    empty.className = "empty-state";
    empty.textContent = "No queries generated yet.";
    panel.appendChild(empty);
    return panel;
  }
  const latest = view.generations[count - 1];
  const heading = document.createElement("h3");
  heading.textContent = `Generation ${latest.generation_no} (${latest.backend_id})`;
  const list = document.createElement("ul");
  list.className = "generated-queries";
  for (const query of latest.queries) {
    const item = document.createElement("li");
    item.textContent = query.text;
    list.appendChild(item);
  }
  panel.append(heading, list);
  if (count >= 2) {
    const previous = view.generations[count - 2];
    const diffHeading = document.createElement("h4");
    diffHeading.textContent = `Changes since generation ${previous.generation_no}`;
    panel.append(
      diffHeading,
      renderQueryDiff(
        diffQuerySets(
          previous.queries.map((q) => q.text),
          latest.queries.map((q) => q.text),
        ),
      ),
    );
  }
  return panel;
}

export function renderRetrievalResults(view: SessionView, handlers: Handlers): HTMLElement {
  const panel = document.createElement("div");
  panel.className = "retrieval-panel";
  const retrieval = view.last_retrieval;
  if (retrieval === null) {
    const empty = document.createElement("p");
    empty.className = "empty-state";
    empty.textContent = "Nothing retrieved yet.";
    panel.appendChild(empty);
    return panel;
  }
  for (const result of retrieval.results) {
    const row = document.createElement("div");
    row.className = "retrieved-row";
    row.dataset.docId = result.doc_id;

    const checkbox = document.createElement("input");
    checkbox.type = "checkbox";
    checkbox.className = "feedback-check";

    const label = document.createElement("span");
    label.textContent = `${result.doc_id} (rrf ${result.score.toFixed(5)})`;

    const querySelect = document.createElement("select");
    querySelect.className = "feedback-query";
    for (const query of result.queries) {
      const option = document.createElement("option");
      option.value = query;
      option.textContent = query;
      querySelect.appendChild(option);
    }

    const add = document.createElement("button");
    add.type = "button";
    add.className = "add-to-prompt";
    add.textContent = "Add to prompt";
    add.addEventListener("click", () => {
      if (checkbox.checked) {
        handlers.feedback(result.doc_id, querySelect.value);
      }
    });

    row.append(checkbox, label, querySelect, add);
    panel.appendChild(row);
  }
  return panel;
}

export function initInteractiveTab(root: HTMLElement, client: Api): void {
  root.innerHTML = `
    <form class="session-form">
      <input name="doc_id" type="text" placeholder="Target doc id" aria-label="Target document id" />
      <select name="instruction_id" aria-label="Instruction"></select>
      <button type="submit">Start session</button>
    </form>
    <p class="error" hidden></p>
    <div class="session-panel" hidden>
      <p class="session-meta"></p>
      <section class="prompt-editor">
        <h3>Prompt</h3>
        <select class="instruction-select" aria-label="Prompt instruction"></select>
        <div class="exemplars-holder"></div>
        <p class="target-doc"></p>
      </section>
      <button type="button" class="generate">Generate queries</button>
      <button type="button" class="retrieve">Retrieve</button>
      <section class="generations-holder"></section>
      <section class="results-holder"></section>
    </div>
  `;

  const error = root.querySelector<HTMLElement>(".error")!;
  const panel = root.querySelector<HTMLElement>(".session-panel")!;
  let view: SessionView | null = null;
  let instructions: Instruction[] = [];

  const showError = (exc: unknown) => {
    if (exc instanceof ApiError && exc.status === 409) {
      error.textContent = `${exc.message} — results are stale, retrieve again before adding feedback.`;
    } else {
      error.textContent = exc instanceof ApiError ? exc.message : String(exc);
    }
    error.hidden = false;
  };

  const run = async (action: () => Promise<SessionView>) => {
    error.hidden = true;
    try {
      view = await action();
      render();
    } catch (exc) {
      showError(exc);
    }
  };

  const handlers: Handlers = {
    patchPrompt: (patch) => void run(() => client.patchPrompt(view!.session_id, patch)),
    feedback: (docId, query) =>
      void run(() => client.sessionFeedback(view!.session_id, docId, query)),
  };

  function render(): void {
    if (view === null) return;
    panel.hidden = false;
    root.querySelector<HTMLElement>(".session-meta")!.textContent =
      `session ${view.session_id} · target ${view.target_doc_id} · state ${view.state}`;

    const select = root.querySelector<HTMLSelectElement>(".instruction-select")!;
    select.replaceChildren();
    for (const instruction of instructions) {
      const option = document.createElement("option");
      option.value = instruction.id;
      option.textContent = `${instruction.id}: ${instruction.text}`;
      select.appendChild(option);
    }
    select.value = view.prompt.instruction.id;

    root
      .querySelector<HTMLElement>(".exemplars-holder")!
      .replaceChildren(renderExemplarList(view, handlers));
    root.querySelector<HTMLElement>(".target-doc")!.textContent =
      `Target: ${view.prompt.target_document_text}`;
    root
      .querySelector<HTMLElement>(".generations-holder")!
      .replaceChildren(renderGenerationPanel(view));
    root
      .querySelector<HTMLElement>(".results-holder")!
      .replaceChildren(renderRetrievalResults(view, handlers));
  }

  root.querySelector<HTMLFormElement>(".session-form")!.addEventListener("submit", (event) => {
    event.preventDefault();
    const data = new FormData(event.target as HTMLFormElement);
    const docId = String(data.get("doc_id") ?? "").trim();
    const instructionId = String(data.get("instruction_id") ?? "") || undefined;
    void run(() => client.createSession(docId, instructionId));
  });

  root.querySelector<HTMLSelectElement>(".instruction-select")!.addEventListener("change", (event) => {
    const value = (event.target as HTMLSelectElement).value;
    if (view !== null && value !== view.prompt.instruction.id) {
      handlers.patchPrompt({ instruction_id: value });
    }
  });

  root.querySelector<HTMLButtonElement>(".generate")!.addEventListener("click", () => {
    if (view !== null) void run(() => client.sessionGenerate(view!.session_id));
  });
  root.querySelector<HTMLButtonElement>(".retrieve")!.addEventListener("click", () => {
    if (view !== null) void run(() => client.sessionRetrieve(view!.session_id, "all"));
  });

  void client
    .instructions()
    .then((body) => {
      instructions = body.instructions;
      const select = root.querySelector<HTMLSelectElement>(
        '.session-form select[name="instruction_id"]',
      )!;
      for (const instruction of instructions) {
        const option = document.createElement("option");
        option.value = instruction.id;
        option.textContent = instruction.id;
        select.appendChild(option);
      }
    })
    .catch(showError);
}
