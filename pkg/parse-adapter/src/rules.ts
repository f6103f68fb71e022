/** Built-in "rules" backend: shallow pattern-matched dependency parses. */

import {
  ADJECTIVES, PREPOSITIONS, PRONOUNS, STOPWORDS, VERB_LEMMA, WH_WORDS,
} from "./lexicon";

export interface Token {
  id: number;        // 1-based
  form: string;
  lemma: string;
  upos: string;
  head: number;      // 0 = root
  deprel: string;
}

export interface ParsedSentence {
  text: string;
  tokens: Token[];
}

function isNumber(tok: string): boolean {
  return /^-?\d+(\.\d+)?$/.test(tok);
}

function isCapitalizedWord(tok: string): boolean {
  return /^[A-Z][A-Za-z]*$/.test(tok);
}

function isAlpha(tok: string): boolean {
  return /^[A-Za-z]+$/.test(tok);
}

function guessUpos(form: string, deprel: string): string {
  if (deprel === "root") return "VERB";
  if (isNumber(form)) return "NUM";
  if (deprel === "nsubj" || deprel === "iobj") return "PROPN";
  if (deprel === "obj" || deprel === "nmod:case") return "NOUN";
  if (deprel === "amod") return "ADJ";
  if (/^[.?!,;]$/.test(form)) return "PUNCT";
  return "X";
}

/**
 * Flat pseudo-parse: lexicon verb as root, leading name as nsubj, digits
 * as nummod on the following noun, that noun as obj, an intervening name
 * as iobj, a known adjective before the obj as amod, and a trailing
 * "in/on/at X" span as nmod:case. Everything else hangs off the root.
 */
export function parseSentence(sentence: string, tokens: string[]): ParsedSentence {
  const n = tokens.length;
  const lemmas = tokens.map((t) => VERB_LEMMA.get(t.toLowerCase()) ?? t.toLowerCase());
  const deprel: string[] = new Array(n).fill("dep");
  const head: Array<number | null> = new Array(n).fill(null);

  let verbI = -1;
  for (let i = 0; i < n; i++) {
    const isVerb = VERB_LEMMA.has(tokens[i].toLowerCase());
    if (isVerb && (i > 0 || tokens[i][0] === tokens[i][0].toLowerCase())) {
      verbI = i;
      break;
    }
  }
  if (verbI < 0 && n > 0 && VERB_LEMMA.has(tokens[0].toLowerCase())) {
    verbI = 0;
  }
  if (verbI < 0) {
    // no trigger verb: degenerate flat parse rooted at the last word
    let rootI = n - 1;
    for (let i = n - 1; i >= 0; i--) {
      if (isAlpha(tokens[i])) {
        rootI = i;
        break;
      }
    }
    const flat = tokens.map((form, i) => ({
      id: i + 1,
      form,
      lemma: form.toLowerCase(),
      upos: i === rootI ? "X" : guessUpos(form, "dep"),
      head: i === rootI ? 0 : rootI + 1,
      deprel: i === rootI ? "root" : "dep",
    }));
    return { text: sentence, tokens: flat };
  }

  deprel[verbI] = "root";
  const attach = (i: number, h: number, rel: string) => {
    head[i] = h;
    deprel[i] = rel;
  };

  for (let i = 0; i < verbI; i++) {
    const t = tokens[i];
    if (WH_WORDS.has(t.toLowerCase())) continue;
    if (isCapitalizedWord(t) || PRONOUNS.has(t.toLowerCase())) {
      attach(i, verbI, "nsubj");
      break;
    }
  }

  let objI = -1;
  let numI = -1;
  for (let i = 0; i < n; i++) {
    if (!isNumber(tokens[i])) continue;
    let nounI = -1;
    for (let j = i + 1; j < n; j++) {
      const w = tokens[j].toLowerCase();
      if (isAlpha(tokens[j]) && !STOPWORDS.has(w) && !ADJECTIVES.has(w)
          && !VERB_LEMMA.has(w) && !isCapitalizedWord(tokens[j])) {
        nounI = j;
        break;
      }
    }
    if (nounI < 0) continue;
    attach(i, nounI, "nummod");
    if (objI < 0 && nounI > verbI) {
      objI = nounI;
      numI = i;
      attach(nounI, verbI, "obj");
    }
  }

  if (objI < 0) {
    for (let j = verbI + 1; j < n; j++) {
      const w = tokens[j].toLowerCase();
      if (isAlpha(tokens[j]) && !STOPWORDS.has(w) && !ADJECTIVES.has(w)
          && !PREPOSITIONS.has(w) && !VERB_LEMMA.has(w)
          && !isCapitalizedWord(tokens[j])) {
        objI = j;
        attach(j, verbI, "obj");
        break;
      }
    }
  }

  if (objI >= 0) {
    const upto = numI >= 0 ? numI : objI;
    for (let i = verbI + 1; i < upto; i++) {
      if (isCapitalizedWord(tokens[i]) && deprel[i] === "dep") {
        attach(i, verbI, "iobj");
        break;
      }
    }
    if (objI > 0 && ADJECTIVES.has(tokens[objI - 1].toLowerCase())) {
      attach(objI - 1, objI, "amod");
    }
  }

  for (let i = n - 1; i > Math.max(verbI, objI); i--) {
    if (PREPOSITIONS.has(tokens[i].toLowerCase()) && deprel[i] === "dep") {
      const span: number[] = [];
      for (let j = i + 1; j < n; j++) {
        if (isAlpha(tokens[j]) && deprel[j] === "dep") span.push(j);
      }
      if (span.length > 0) {
        const nmodI = span[span.length - 1];
        attach(nmodI, verbI, "nmod:case");
        attach(i, nmodI, "dep");
        for (const j of span.slice(0, -1)) attach(j, nmodI, "dep");
      }
      break;
    }
  }

  const out: Token[] = tokens.map((form, i) => {
    const h = i === verbI ? 0 : head[i] === null ? verbI + 1 : (head[i] as number) + 1;
    return {
      id: i + 1,
      form,
      lemma: lemmas[i],
      upos: guessUpos(form, deprel[i]),
      head: h,
      deprel: deprel[i],
    };
  });
  return { text: sentence, tokens: out };
}
