/** Verb form -> lemma table for the built-in rule backend. */

const LEMMAS = [
  "have", "own", "keep", "hold", "contain", "include", "remain", "measure",
  "cost", "exist", "give", "hand", "send", "get", "receive", "find", "pick",
  "collect", "take", "lose", "drop", "misplace", "make", "bake", "build",
  "plant", "create", "eat", "drink", "use", "break", "destroy", "combine",
  "merge", "separate", "sort", "multiply", "triple", "double", "divide",
  "share", "split", "earn", "win", "spend", "pay", "buy", "purchase", "sell",
];

const IRREGULAR: Record<string, string> = {
  had: "have", has: "have", gave: "give", got: "get", found: "find",
  took: "take", lost: "lose", made: "make", ate: "eat", drank: "drink",
  broke: "break", won: "win", spent: "spend", paid: "pay", bought: "buy",
  sold: "sell", kept: "keep", held: "hold", sent: "send", built: "build",
  split: "split",
};

function inflections(lemma: string): string[] {
  const forms = [lemma, lemma + "s", lemma + "ed", lemma + "ing"];
  if (lemma.endsWith("e")) {
    forms.push(lemma + "d", lemma.slice(0, -1) + "ing");
  }
  if (/[^aeiou][aeiou][^aeiouwxy]$/.test(lemma)) {
    const last = lemma[lemma.length - 1];
    forms.push(lemma + last + "ed", lemma + last + "ing");
  }
  if (lemma.endsWith("y")) {
    forms.push(lemma.slice(0, -1) + "ied", lemma.slice(0, -1) + "ies");
  }
  if (/(s|x|z|ch|sh)$/.test(lemma)) {
    forms.push(lemma + "es");
  }
  return forms;
}

export const VERB_LEMMA: ReadonlyMap<string, string> = (() => {
  const table = new Map<string, string>();
  for (const lemma of LEMMAS) {
    for (const form of inflections(lemma)) {
      table.set(form, lemma);
    }
  }
  for (const [form, lemma] of Object.entries(IRREGULAR)) {
    table.set(form, lemma);
  }
  return table;
})();

export const STOPWORDS = new Set([
  "the", "a", "an", "of", "to", "and", "or", "his", "her", "their", "its",
  "my", "your", "our", "some", "each", "every", "more", "many", "much",
  "did", "does", "do", "now", "then", "there", "are", "is", "was", "were",
  "equally", "among", "between", "by", "away", "that", "this", "these",
]);

export const ADJECTIVES = new Set([
  "red", "blue", "green", "yellow", "black", "white", "brown", "pink",
  "purple", "orange", "gray", "small", "big", "large", "little", "old",
  "new", "tall", "short", "shiny", "broken",
]);

export const PRONOUNS = new Set([
  "he", "she", "they", "i", "we", "you", "it", "him", "her", "them",
]);

export const WH_WORDS = new Set([
  "who", "what", "how", "when", "where", "why", "which", "whom",
]);

export const PREPOSITIONS = new Set(["in", "on", "at"]);
