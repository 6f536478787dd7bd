import { beforeEach, describe, expect, it, vi } from "vitest";

import type { Api } from "../src/api";
import { ApiError } from "../src/api";
import { initManualTab, renderResultCard } from "../src/tabs/manual";
import { FLOOD_SEARCH_RESULT } from "./fixtures";

function stubApi(overrides: Partial<Api>): Api {
  const reject = () => Promise.reject(new Error("not stubbed"));
  return {
    health: reject,
    search: reject,
    generate: reject,
    instructions: reject,
    createSession: reject,
    getSession: reject,
    sessionGenerate: reject,
    sessionRetrieve: reject,
    sessionFeedback: reject,
    patchPrompt: reject,
    ...overrides,
  } as Api;
}

async function flush(): Promise<void> {
  await Promise.resolve();
  await Promise.resolve();
}

describe("manual search tab", () => {
  let root: HTMLElement;

  beforeEach(() => {
    root = document.createElement("div");
    document.body.replaceChildren(root);
  });

  it("renders fused results with highlighted spans", async () => {
    const search = vi.fn().mockResolvedValue({ results: [FLOOD_SEARCH_RESULT] });
    initManualTab(root, stubApi({ search }));

    root.querySelector<HTMLInputElement>('input[name="q"]')!.value = "flood families";
    root.querySelector<HTMLInputElement>('input[name="langs"]')!.value = "en";
    root.querySelector("form")!.dispatchEvent(new Event("submit", { cancelable: true }));
    await flush();

    expect(search).toHaveBeenCalledWith("flood families", ["en"]);
    const card = root.querySelector<HTMLElement>(".result-card")!;
    expect(card.dataset.docId).toBe("en-flood-01");
    expect(card.querySelectorAll("mark.hl-trigger").length).toBeGreaterThan(0);
    expect(card.querySelectorAll("mark.hl-argument").length).toBeGreaterThan(0);
    // English fixture docs have no translation; the card falls back to text
    expect(card.querySelector(".result-translation")!.textContent).toBe(
      FLOOD_SEARCH_RESULT.text,
    );
  });

  it("shows an explicit empty state", async () => {
    initManualTab(root, stubApi({ search: vi.fn().mockResolvedValue({ results: [] }) }));
    root.querySelector<HTMLInputElement>('input[name="q"]')!.value = "zzz";
    root.querySelector("form")!.dispatchEvent(new Event("submit", { cancelable: true }));
    await flush();
    expect(root.querySelector(".empty-state")!.textContent).toBe("No results.");
  });

  it("surfaces API errors inline and preserves the input", async () => {
    const search = vi.fn().mockRejectedValue(new ApiError(400, "q must be non-empty"));
    initManualTab(root, stubApi({ search }));
    const input = root.querySelector<HTMLInputElement>('input[name="q"]')!;
    input.value = "   ";
    root.querySelector("form")!.dispatchEvent(new Event("submit", { cancelable: true }));
    await flush();
    const error = root.querySelector<HTMLElement>(".error")!;
    expect(error.hidden).toBe(false);
    expect(error.textContent).toBe("q must be non-empty");
    expect(input.value).toBe("   ");
  });
});

describe("renderResultCard", () => {
  it("shows the translation when the service provides one", () => {
    const card = renderResultCard({
      ...FLOOD_SEARCH_RESULT,
      doc_id: "ar-flood-01",
      lang: "ar",
      translation: "Floods swept through many villages.",
    });
    expect(card.querySelector(".result-translation")!.textContent).toBe(
      "Floods swept through many villages.",
    );
    expect(card.querySelector(".badge-lang")!.textContent).toBe("ar");
  });
});
