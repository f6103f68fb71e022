/** CoNLL-U serialization (10 tab-separated columns, blank-line blocks). */

import { ParsedSentence } from "./rules";

export function toConllu(sentences: ParsedSentence[]): string {
  const blocks = sentences.map((sent) => {
    const lines = [`# text = ${sent.text}`];
    for (const tok of sent.tokens) {
      lines.push([
        String(tok.id), tok.form, tok.lemma, tok.upos, "_", "_",
        String(tok.head), tok.deprel, "_", "_",
      ].join("\t"));
    }
    return lines.join("\n");
  });
  return blocks.length > 0 ? blocks.join("\n\n") + "\n" : "";
}
