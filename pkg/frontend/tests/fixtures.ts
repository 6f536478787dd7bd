// Shared test payloads, frozen from real service responses against the
// bundled corpus (see ../../fixtures).  Shapes must match src/types.ts.

import type { SearchResult, SessionView } from "../src/types";

export const FLOOD_DOC_TEXT =
  "Heavy monsoon rains flooded the river delta on Tuesday, forcing hundreds of families to " +
  "evacuate their homes as flood waters kept rising; most families sheltered in schools.";

export const FLOOD_SEARCH_RESULT: SearchResult = {
  doc_id: "en-flood-01",
  lang: "en",
  score: 0.01639344262295082,
  text: FLOOD_DOC_TEXT,
  translation: null,
  segments: [
    { kinds: [], text: "Heavy monsoon rains " },
    { kinds: ["trigger"], text: "flooded" },
    { kinds: [], text: " " },
    { kinds: ["argument"], text: "the river delta" },
    { kinds: [], text: " on Tuesday, forcing hundreds of families to " },
    { kinds: ["trigger"], text: "evacuate" },
    { kinds: [], text: " " },
    { kinds: ["argument"], text: "their homes" },
    { kinds: [], text: " as " },
    { kinds: ["argument", "trigger"], text: "flood" },
    { kinds: ["argument"], text: " waters" },
    { kinds: [], text: " kept rising; most families sheltered in schools." },
  ],
};

// The two query sets from the service's feedback-sensitivity loop on the
// bundled corpus: generation 1, and generation 2 after feeding back
// en-fire-04 with generation 1's first query.
export const GEN1_QUERIES = [
  "flood families as delta flooded forcing",
  "families as delta flooded forcing heavy",
  "as delta flooded forcing heavy homes",
  "delta flooded forcing heavy homes hundreds",
  "flooded forcing heavy homes hundreds kept",
];

export const GEN2_QUERIES = [
  "families as delta flood flooded forcing",
  "as delta flood flooded forcing heavy",
  "delta flood flooded forcing heavy homes",
  "flood flooded forcing heavy homes hundreds",
  "flooded forcing heavy homes hundreds kept",
];

const FIRE_DOC_TEXT =
  "Wildfires burned pine forests near the coastal town overnight, and emergency crews " +
  "helped families evacuate two villages before dawn.";

const BASE_PROMPT = {
  instruction: {
    id: "i1",
    text: "Generate a search query for the following document:",
  },
  exemplars: [
    {
      document_text:
        "Heavy rains flooded the river delta, forcing hundreds of families to evacuate their homes.",
      query_text: "flood evacuation",
      origin: "default" as const,
    },
    {
      document_text:
        "The city council approved a new subsidy for rooftop solar panels on public buildings.",
      query_text: "solar subsidy vote",
      origin: "default" as const,
    },
  ],
  target_document_text: FLOOD_DOC_TEXT,
};

function generation(no: number, texts: string[]) {
  return {
    generation_no: no,
    backend_id: "extractive",
    queries: texts.map((text, i) => ({ text, backend_id: "extractive", seq_no: i })),
  };
}

export const CREATED_VIEW: SessionView = {
  session_id: "s1",
  target_doc_id: "en-flood-01",
  state: "created",
  prompt: BASE_PROMPT,
  generations: [],
  last_retrieval: null,
  feedback_events: [],
};

export const GENERATED_VIEW: SessionView = {
  ...CREATED_VIEW,
  state: "generated",
  generations: [generation(1, GEN1_QUERIES)],
};

export const RETRIEVED_VIEW: SessionView = {
  ...GENERATED_VIEW,
  state: "retrieved",
  last_retrieval: {
    retrieval_no: 1,
    query_texts: GEN1_QUERIES,
    results: [
      {
        doc_id: "en-flood-01",
        score: 0.08196721311475409,
        langs: ["en"],
        queries: GEN1_QUERIES,
      },
      {
        doc_id: "en-fire-04",
        score: 0.03225806451612903,
        langs: ["en"],
        queries: [GEN1_QUERIES[0], GEN1_QUERIES[1]],
      },
    ],
  },
};

export const AFTER_FEEDBACK_VIEW: SessionView = {
  ...RETRIEVED_VIEW,
  prompt: {
    ...BASE_PROMPT,
    exemplars: [
      ...BASE_PROMPT.exemplars,
      {
        document_text: FIRE_DOC_TEXT,
        query_text: GEN1_QUERIES[0],
        origin: "feedback" as const,
      },
    ],
  },
  feedback_events: [
    { doc_id: "en-fire-04", query_text: GEN1_QUERIES[0], applied_at: 1 },
  ],
};

export const REGENERATED_VIEW: SessionView = {
  ...AFTER_FEEDBACK_VIEW,
  state: "generated",
  generations: [generation(1, GEN1_QUERIES), generation(2, GEN2_QUERIES)],
};
