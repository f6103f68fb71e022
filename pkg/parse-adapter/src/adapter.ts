/** Text-or-JSONL to CoNLL-U conversion for a named parser backend. */

import { toConllu } from "./conllu";
import { parseSentence, ParsedSentence } from "./rules";
import { splitSentences, tokenize } from "./split";

export class BackendUnavailable extends Error {}

export type Backend = (sentence: string) => ParsedSentence;

export const BACKENDS: Record<string, Backend> = {
  rules: (sentence) => parseSentence(sentence, tokenize(sentence)),
};

function problemText(record: Record<string, unknown>): string {
  const body = String(record.body ?? "").trim();
  const question = String(record.question ?? "").trim();
  const head = body && !/[.?!]$/.test(body) ? body + "." : body;
  return [head, question].filter(Boolean).join(" ");
}

/** Pull raw sentences out of plain text or problem JSONL content. */
export function extractSentences(content: string): string[] {
  const trimmed = content.trim();
  if (!trimmed) return [];
  const lines = trimmed.split("\n").map((l) => l.trim()).filter(Boolean);
  const looksJsonl = lines.every((l) => l.startsWith("{"));
  if (looksJsonl) {
    const sentences: string[] = [];
    for (const line of lines) {
      sentences.push(...splitSentences(problemText(JSON.parse(line))));
    }
    return sentences;
  }
  return splitSentences(trimmed);
}

export function parseTextToConllu(content: string, pipeline: string): string {
  const backend = BACKENDS[pipeline];
  if (!backend) {
    throw new BackendUnavailable(
      `no parser backend named '${pipeline}' (available: ${Object.keys(BACKENDS).join(", ")})`);
  }
  return toConllu(extractSentences(content).map(backend));
}
