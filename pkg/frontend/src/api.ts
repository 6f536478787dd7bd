import type {
  GenerateResponse,
  HealthResponse,
  Instruction,
  PromptPatch,
  SearchResponse,
  SessionView,
} from "./types";

// Same-origin by default (the service can mount the built bundle under
// /ui); override with window.__QUERYFORGE_API__ for a separate host.
const API_BASE =
  (window as { __QUERYFORGE_API__?: string }).__QUERYFORGE_API__ ?? "";

export class ApiError extends Error {
  constructor(
    public status: number,
    detail: string,
  ) {
    super(detail);
  }
}

async function request<T>(method: string, path: string, body?: unknown): Promise<T> {
  const init: RequestInit = { method, headers: {} };
  if (body !== undefined) {
    init.headers = { "Content-Type": "application/json" };
    init.body = JSON.stringify(body);
  }
  const response = await fetch(`${API_BASE}${path}`, init);
  const payload = await response.json().catch(() => ({}));
  if (!response.ok) {
    const detail =
      typeof (payload as { detail?: unknown }).detail === "string"
        ? (payload as { detail: string }).detail
        : `request failed with status ${response.status}`;
    throw new ApiError(response.status, detail);
  }
  return payload as T;
}

export const api = {
  health: () => request<HealthResponse>("GET", "/api/health"),

  search: (q: string, langs?: string[], k?: number) => {
    const params = new URLSearchParams({ q });
    if (langs && langs.length > 0) params.set("langs", langs.join(","));
    if (k !== undefined) params.set("k", String(k));
    return request<SearchResponse>("GET", `/api/search?${params}`);
  },

  generate: (body: { doc_id?: string; text?: string; n?: number; backend_id?: string }) =>
    request<GenerateResponse>("POST", "/api/generate", body),

  instructions: () =>
    request<{ instructions: Instruction[] }>("GET", "/api/instructions"),

  createSession: (doc_id: string, instruction_id?: string) =>
    request<SessionView>("POST", "/api/sessions", { doc_id, instruction_id }),

  getSession: (id: string) => request<SessionView>("GET", `/api/sessions/${id}`),

  sessionGenerate: (id: string, body: { backend_id?: string; n?: number } = {}) =>
    request<SessionView>("POST", `/api/sessions/${id}/generate`, body),

  sessionRetrieve: (
    id: string,
    selection: "all" | { generation: number; query: number } = "all",
    k?: number,
  ) => request<SessionView>("POST", `/api/sessions/${id}/retrieve`, { selection, k }),

  sessionFeedback: (id: string, doc_id: string, query: string) =>
    request<SessionView>("POST", `/api/sessions/${id}/feedback`, { doc_id, query }),

  patchPrompt: (id: string, patch: PromptPatch) =>
    request<SessionView>("PATCH", `/api/sessions/${id}/prompt`, patch),
};

export type Api = typeof api;
