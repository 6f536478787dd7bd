import { describe, expect, it } from "vitest";

import { renderSegments } from "../src/highlight";
import { FLOOD_DOC_TEXT, FLOOD_SEARCH_RESULT } from "./fixtures";

describe("renderSegments", () => {
  it("reproduces the document text exactly", () => {
    const holder = document.createElement("div");
    holder.appendChild(renderSegments(FLOOD_SEARCH_RESULT.segments));
    expect(holder.textContent).toBe(FLOOD_DOC_TEXT);
  });

  it("marks triggers and arguments with distinct classes", () => {
    const holder = document.createElement("div");
    holder.appendChild(renderSegments(FLOOD_SEARCH_RESULT.segments));
    const triggers = holder.querySelectorAll("mark.hl-trigger");
    const args = holder.querySelectorAll("mark.hl-argument");
    expect(triggers.length).toBeGreaterThan(0);
    expect(args.length).toBeGreaterThan(0);
    const flooded = Array.from(triggers).find((m) => m.textContent === "flooded")!;
    expect(flooded.classList.contains("hl-argument")).toBe(false);
    const delta = Array.from(args).find((m) => m.textContent === "the river delta")!;
    expect(delta.classList.contains("hl-trigger")).toBe(false);
  });

  it("gives overlap segments both classes", () => {
    const holder = document.createElement("div");
    holder.appendChild(renderSegments(FLOOD_SEARCH_RESULT.segments));
    const overlap = Array.from(holder.querySelectorAll("mark")).find(
      (m) => m.textContent === "flood",
    )!;
    expect(overlap.classList.contains("hl-trigger")).toBe(true);
    expect(overlap.classList.contains("hl-argument")).toBe(true);
  });

  it("leaves plain segments unwrapped", () => {
    const holder = document.createElement("div");
    holder.appendChild(renderSegments([{ text: "plain", kinds: [] }]));
    expect(holder.querySelector("mark")).toBeNull();
    expect(holder.textContent).toBe("plain");
  });
});
