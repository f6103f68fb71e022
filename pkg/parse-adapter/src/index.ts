export { splitSentences, tokenize } from "./split";
export { parseSentence, ParsedSentence, Token } from "./rules";
export { toConllu } from "./conllu";
export { parseTextToConllu, BackendUnavailable, BACKENDS } from "./adapter";
