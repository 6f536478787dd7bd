export interface QuerySetDiff {
  added: string[];
  removed: string[];
  kept: string[];
}

// Set difference between two generations' query texts, preserving the
// order each side emitted.  Display-only: the texts come from the server.
export function diffQuerySets(previous: string[], next: string[]): QuerySetDiff {
  const prev = new Set(previous);
  const curr = new Set(next);
  return {
    added: next.filter((q) => !prev.has(q)),
    removed: previous.filter((q) => !curr.has(q)),
    kept: next.filter((q) => prev.has(q)),
  };
}

export function renderQueryDiff(diff: QuerySetDiff): HTMLElement {
  const root = document.createElement("div");
  root.className = "query-diff";
  const section = (label: string, cls: string, items: string[]) => {
    for (const text of items) {
      const row = document.createElement("div");
      row.className = `diff-row ${cls}`;
      const tag = document.createElement("span");
      tag.className = "diff-tag";
      tag.textContent = label;
      const body = document.createElement("span");
      body.textContent = text;
      row.append(tag, body);
      root.appendChild(row);
    }
  };
  section("+", "diff-added", diff.added);
  section("−", "diff-removed", diff.removed);
  section("=", "diff-kept", diff.kept);
  return root;
}
