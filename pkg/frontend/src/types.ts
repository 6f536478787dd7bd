// Mirrors of the service's JSON payloads. The UI never recomputes scores,
// prompts, or rankings: it renders exactly what these carry.

export interface HighlightSegment {
  text: string;
  kinds: string[];
}

export interface SearchResult {
  doc_id: string;
  lang: string;
  score: number;
  text: string;
  translation: string | null;
  segments: HighlightSegment[];
}

export interface SearchResponse {
  results: SearchResult[];
}

export interface GeneratedQuery {
  text: string;
  backend_id: string;
  seq_no: number;
}

export interface GenerateResponse {
  queries: GeneratedQuery[];
}

export interface Instruction {
  id: string;
  text: string;
}

export type ExemplarOrigin = "default" | "feedback" | "manual";

export interface ExemplarPair {
  document_text: string;
  query_text: string;
  origin: ExemplarOrigin;
}

export interface PromptView {
  instruction: Instruction;
  exemplars: ExemplarPair[];
  target_document_text: string;
}

export interface GenerationView {
  generation_no: number;
  backend_id: string;
  queries: GeneratedQuery[];
}

export interface RetrievedResult {
  doc_id: string;
  score: number;
  langs: string[];
  queries: string[];
}

export interface RetrievalView {
  retrieval_no: number;
  query_texts: string[];
  results: RetrievedResult[];
}

export interface FeedbackEventView {
  doc_id: string;
  query_text: string;
  applied_at: number;
}

export interface SessionView {
  session_id: string;
  target_doc_id: string;
  state: string;
  prompt: PromptView;
  generations: GenerationView[];
  last_retrieval: RetrievalView | null;
  feedback_events: FeedbackEventView[];
}

export interface HealthResponse {
  status: string;
  languages: string[];
  backends: string[];
}

export type PromptPatch =
  | { instruction_id: string }
  | { edit: { index: number; document_text?: string; query_text?: string } }
  | { reorder: number[] }
  | { remove: { index: number } };
