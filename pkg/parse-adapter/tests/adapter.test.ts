import { describe, expect, it } from "vitest";
import {
  BackendUnavailable, parseTextToConllu,
} from "../src/adapter";
import { parseSentence } from "../src/rules";
import { splitSentences, tokenize } from "../src/split";
import { toConllu } from "../src/conllu";

const WORKED = "John had 5 books. John gave Robert 2 books. "
  + "How many books does John have now?";

function rel(block: string, deprel: string): string[] {
  return block
    .split("\n")
    .filter((l) => l.split("\t")[7] === deprel)
    .map((l) => l.split("\t")[1]);
}

describe("splitSentences", () => {
  it("splits the worked example into three sentences", () => {
    expect(splitSentences(WORKED)).toEqual([
      "John had 5 books.",
      "John gave Robert 2 books.",
      "How many books does John have now?",
    ]);
  });

  it("keeps abbreviations attached", () => {
    expect(splitSentences("Mr. Smith ran. He won!")).toEqual([
      "Mr. Smith ran.", "He won!",
    ]);
  });

  it("returns nothing for blank input", () => {
    expect(splitSentences("   ")).toEqual([]);
  });
});

describe("tokenize", () => {
  it("detaches terminal punctuation", () => {
    expect(tokenize("John had 5 books.")).toEqual(
      ["John", "had", "5", "books", "."]);
    expect(tokenize("How many books does John have now?")).toEqual(
      ["How", "many", "books", "does", "John", "have", "now", "?"]);
  });
});

describe("parseSentence", () => {
  it("finds subject, object and numeral in a possession sentence", () => {
    const sent = parseSentence("John had 5 books.",
      tokenize("John had 5 books."));
    const byRel = new Map(sent.tokens.map((t) => [t.deprel, t]));
    expect(byRel.get("root")?.form).toBe("had");
    expect(byRel.get("root")?.lemma).toBe("have");
    expect(byRel.get("nsubj")?.form).toBe("John");
    expect(byRel.get("obj")?.form).toBe("books");
    expect(byRel.get("nummod")?.form).toBe("5");
    expect(byRel.get("nummod")?.head).toBe(byRel.get("obj")?.id);
  });

  it("attaches a beneficiary between verb and numeral", () => {
    const sent = parseSentence("John gave Robert 2 books.",
      tokenize("John gave Robert 2 books."));
    const byRel = new Map(sent.tokens.map((t) => [t.deprel, t]));
    expect(byRel.get("root")?.lemma).toBe("give");
    expect(byRel.get("iobj")?.form).toBe("Robert");
    expect(byRel.get("nsubj")?.form).toBe("John");
  });

  it("has exactly one root in every parse", () => {
    const samples = [
      "Mary found 3 red balloons in the park.",
      "How many books are there?",
      "The sky is very pretty today.",
    ];
    for (const text of samples) {
      const sent = parseSentence(text, tokenize(text));
      expect(sent.tokens.filter((t) => t.head === 0)).toHaveLength(1);
    }
  });
});

describe("toConllu", () => {
  it("emits 10 tab-separated columns and a text comment", () => {
    const out = parseTextToConllu("John had 5 books.", "rules");
    const lines = out.trim().split("\n");
    expect(lines[0]).toBe("# text = John had 5 books.");
    for (const line of lines.slice(1)) {
      expect(line.split("\t")).toHaveLength(10);
    }
  });

  it("preserves sentence count and order", () => {
    const out = parseTextToConllu(WORKED, "rules");
    const texts = out.split("\n").filter((l) => l.startsWith("# text = "));
    expect(texts).toHaveLength(3);
    expect(texts[0]).toContain("John had 5 books.");
    expect(texts[2]).toContain("have now?");
  });

  it("contains nsubj and nummod for the narrative sentences", () => {
    const blocks = parseTextToConllu(WORKED, "rules").trim().split("\n\n");
    expect(rel(blocks[0], "nsubj")).toEqual(["John"]);
    expect(rel(blocks[0], "nummod")).toEqual(["5"]);
    expect(rel(blocks[1], "nsubj")).toEqual(["John"]);
    expect(rel(blocks[1], "nummod")).toEqual(["2"]);
    expect(rel(blocks[1], "iobj")).toEqual(["Robert"]);
  });

  it("handles empty sentence lists", () => {
    expect(toConllu([])).toBe("");
  });
});

describe("parseTextToConllu", () => {
  it("accepts problem JSONL input", () => {
    const jsonl = JSON.stringify({
      id: "t1",
      body: "John had 5 books. John gave Robert 2 books.",
      question: "How many books does John have now?",
    }) + "\n";
    const out = parseTextToConllu(jsonl, "rules");
    const texts = out.split("\n").filter((l) => l.startsWith("# text = "));
    expect(texts).toHaveLength(3);
  });

  it("returns empty output for empty input", () => {
    expect(parseTextToConllu("", "rules")).toBe("");
  });

  it("rejects unknown backends", () => {
    expect(() => parseTextToConllu("x.", "stanford"))
      .toThrow(BackendUnavailable);
  });
});
