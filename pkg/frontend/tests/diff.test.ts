import { describe, expect, it } from "vitest";

import { diffQuerySets, renderQueryDiff } from "../src/diff";
import { GEN1_QUERIES, GEN2_QUERIES } from "./fixtures";

describe("diffQuerySets", () => {
  it("splits the feedback-loop generations into added/removed/kept", () => {
    const diff = diffQuerySets(GEN1_QUERIES, GEN2_QUERIES);
    expect(diff.added).toEqual(GEN2_QUERIES.slice(0, 4));
    expect(diff.removed).toEqual(GEN1_QUERIES.slice(0, 4));
    expect(diff.kept).toEqual(["flooded forcing heavy homes hundreds kept"]);
  });

  it("reports no changes for identical sets", () => {
    const diff = diffQuerySets(GEN1_QUERIES, GEN1_QUERIES);
    expect(diff.added).toEqual([]);
    expect(diff.removed).toEqual([]);
    expect(diff.kept).toEqual(GEN1_QUERIES);
  });
});

describe("renderQueryDiff", () => {
  it("renders one styled row per query", () => {
    const element = renderQueryDiff(diffQuerySets(GEN1_QUERIES, GEN2_QUERIES));
    expect(element.querySelectorAll(".diff-added").length).toBe(4);
    expect(element.querySelectorAll(".diff-removed").length).toBe(4);
    expect(element.querySelectorAll(".diff-kept").length).toBe(1);
    const added = element.querySelector(".diff-added")!;
    expect(added.textContent).toContain(GEN2_QUERIES[0]);
  });
});
