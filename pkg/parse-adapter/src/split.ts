/** Sentence splitting and tokenization, mirroring the solver's splitter. */

const ABBREVIATIONS = new Set([
  "mr.", "mrs.", "dr.", "ms.", "prof.", "st.", "jr.", "sr.", "no.",
]);

const DETACHABLE = new Set([".", "?", "!", ",", ";"]);

export function splitSentences(text: string): string[] {
  const pieces: string[] = [];
  const re = /(?<=[.?!])\s+/g;
  let start = 0;
  let m: RegExpExecArray | null;
  while ((m = re.exec(text)) !== null) {
    const candidate = text.slice(start, m.index).trim();
    if (!candidate) {
      start = re.lastIndex;
      continue;
    }
    const words = candidate.split(/\s+/);
    const lastWord = words[words.length - 1].toLowerCase();
    if (ABBREVIATIONS.has(lastWord)) {
      continue;
    }
    pieces.push(candidate);
    start = re.lastIndex;
  }
  const tail = text.slice(start).trim();
  if (tail) {
    pieces.push(tail);
  }
  return pieces;
}

export function tokenize(sentence: string): string[] {
  const tokens: string[] = [];
  for (let chunk of sentence.split(/\s+/)) {
    if (!chunk) continue;
    if (ABBREVIATIONS.has(chunk.toLowerCase())) {
      tokens.push(chunk);
      continue;
    }
    const trailing: string[] = [];
    while (chunk.length > 1 && DETACHABLE.has(chunk[chunk.length - 1])) {
      if (ABBREVIATIONS.has(chunk.toLowerCase())) break;
      trailing.push(chunk[chunk.length - 1]);
      chunk = chunk.slice(0, -1);
    }
    if (chunk) tokens.push(chunk);
    tokens.push(...trailing.reverse());
  }
  return tokens;
}
