#!/usr/bin/env python3
"""Regenerate the committed test fixtures.

Emits the curated problem suite with gold CoNLL-U parses, the error-path
fixtures, the synthetic frame corpus, and the kappa matrices. Run from
the repository root:

    python3 scripts/make_fixtures.py
"""

import json
import os
import sys

sys.path.insert(0, os.path.join(os.path.dirname(__file__), "..", "src"))

from framesolve.evaluate import write_frame_corpus  # noqa: E402
from framesolve.synth import generate_corpus        # noqa: E402

FIXTURES = os.path.join(os.path.dirname(__file__), "..", "tests", "fixtures")


def row(form, lemma, upos, head, deprel):
    return (form, lemma, upos, head, deprel)


def block(text, rows):
    lines = [f"# text = {text}"]
    for i, (form, lemma, upos, head, deprel) in enumerate(rows, start=1):
        lines.append("\t".join([str(i), form, lemma, upos, "_", "_",
                                str(head), deprel, "_", "_"]))
    return "\n".join(lines)


# -- narrative sentence builders: (text, rows) --

def had_s(holder, n, ent_pl, attr=None, verb="had", lemma="have"):
    if attr:
        text = f"{holder} {verb} {n} {attr} {ent_pl}."
        rows = [row(holder, holder.lower(), "PROPN", 2, "nsubj"),
                row(verb, lemma, "VERB", 0, "root"),
                row(str(n), str(n), "NUM", 5, "nummod"),
                row(attr, attr, "ADJ", 5, "amod"),
                row(ent_pl, ent_pl, "NOUN", 2, "obj"),
                row(".", ".", "PUNCT", 2, "punct")]
    else:
        text = f"{holder} {verb} {n} {ent_pl}."
        rows = [row(holder, holder.lower(), "PROPN", 2, "nsubj"),
                row(verb, lemma, "VERB", 0, "root"),
                row(str(n), str(n), "NUM", 4, "nummod"),
                row(ent_pl, ent_pl, "NOUN", 2, "obj"),
                row(".", ".", "PUNCT", 2, "punct")]
    return text, rows


def gave_s(holder, benef, n, ent_pl, attr=None, verb="gave",
           lemma="give"):
    if attr:
        text = f"{holder} {verb} {benef} {n} {attr} {ent_pl}."
        rows = [row(holder, holder.lower(), "PROPN", 2, "nsubj"),
                row(verb, lemma, "VERB", 0, "root"),
                row(benef, benef.lower(), "PROPN", 2, "iobj"),
                row(str(n), str(n), "NUM", 6, "nummod"),
                row(attr, attr, "ADJ", 6, "amod"),
                row(ent_pl, ent_pl, "NOUN", 2, "obj"),
                row(".", ".", "PUNCT", 2, "punct")]
    else:
        text = f"{holder} {verb} {benef} {n} {ent_pl}."
        rows = [row(holder, holder.lower(), "PROPN", 2, "nsubj"),
                row(verb, lemma, "VERB", 0, "root"),
                row(benef, benef.lower(), "PROPN", 2, "iobj"),
                row(str(n), str(n), "NUM", 5, "nummod"),
                row(ent_pl, ent_pl, "NOUN", 2, "obj"),
                row(".", ".", "PUNCT", 2, "punct")]
    return text, rows


def action_s(holder, verb, lemma, n, ent_pl):
    return had_s(holder, n, ent_pl, verb=verb, lemma=lemma)


def contained_s(container, n, ent_pl, verb="contained", lemma="contain"):
    text = f"The {container} {verb} {n} {ent_pl}."
    rows = [row("The", "the", "DET", 2, "det"),
            row(container, container, "NOUN", 3, "nsubj"),
            row(verb, lemma, "VERB", 0, "root"),
            row(str(n), str(n), "NUM", 5, "nummod"),
            row(ent_pl, ent_pl, "NOUN", 3, "obj"),
            row(".", ".", "PUNCT", 3, "punct")]
    return text, rows


def agent_action_s(agent, verb, lemma, n, ent_pl):
    text = f"The {agent} {verb} {n} {ent_pl}."
    rows = [row("The", "the", "DET", 2, "det"),
            row(agent, agent, "NOUN", 3, "nsubj"),
            row(verb, lemma, "VERB", 0, "root"),
            row(str(n), str(n), "NUM", 5, "nummod"),
            row(ent_pl, ent_pl, "NOUN", 3, "obj"),
            row(".", ".", "PUNCT", 3, "punct")]
    return text, rows


def multiply_s(holder, n, ent_pl):
    text = f"{holder} multiplied the {ent_pl} by {n}."
    rows = [row(holder, holder.lower(), "PROPN", 2, "nsubj"),
            row("multiplied", "multiply", "VERB", 0, "root"),
            row("the", "the", "DET", 4, "det"),
            row(ent_pl, ent_pl, "NOUN", 2, "obj"),
            row("by", "by", "ADP", 6, "case"),
            row(str(n), str(n), "NUM", 2, "nummod"),
            row(".", ".", "PUNCT", 2, "punct")]
    return text, rows


def divide_s(holder, n, ent_pl):
    text = f"{holder} shared the {ent_pl} equally among {n} friends."
    rows = [row(holder, holder.lower(), "PROPN", 2, "nsubj"),
            row("shared", "share", "VERB", 0, "root"),
            row("the", "the", "DET", 4, "det"),
            row(ent_pl, ent_pl, "NOUN", 2, "obj"),
            row("equally", "equally", "ADV", 2, "advmod"),
            row("among", "among", "ADP", 8, "case"),
            row(str(n), str(n), "NUM", 8, "nummod"),
            row("friends", "friend", "NOUN", 2, "nmod:case"),
            row(".", ".", "PUNCT", 2, "punct")]
    return text, rows


# -- question builders --

def q_howmany(holder, ent_pl, attr=None, now=True):
    words = ["How", "many"] + ([attr] if attr else []) + \
        [ent_pl, "does", holder, "have"] + (["now"] if now else [])
    text = " ".join(words) + "?"
    ent_i = 3 if attr else 3  # position of the entity token
    rows = [row("How", "how", "ADV", 2, "advmod")]
    if attr:
        rows.append(row("many", "many", "ADJ", 4, "amod"))
        rows.append(row(attr, attr, "ADJ", 4, "amod"))
        ent_i = 4
    else:
        rows.append(row("many", "many", "ADJ", 3, "amod"))
        ent_i = 3
    verb_i = ent_i + 3
    rows.append(row(ent_pl, ent_pl, "NOUN", verb_i, "obj"))
    rows.append(row("does", "do", "AUX", verb_i, "aux"))
    rows.append(row(holder, holder.lower(), "PROPN", verb_i, "nsubj"))
    rows.append(row("have", "have", "VERB", 0, "root"))
    if now:
        rows.append(row("now", "now", "ADV", verb_i, "advmod"))
    rows.append(row("?", "?", "PUNCT", verb_i, "punct"))
    return text, rows


def q_there(ent_pl, now=False):
    words = ["How", "many", ent_pl, "are", "there"] + (["now"] if now else [])
    text = " ".join(words) + "?"
    rows = [row("How", "how", "ADV", 2, "advmod"),
            row("many", "many", "ADJ", 3, "amod"),
            row(ent_pl, ent_pl, "NOUN", 4, "nsubj"),
            row("are", "be", "VERB", 0, "root"),
            row("there", "there", "PRON", 4, "expl")]
    if now:
        rows.append(row("now", "now", "ADV", 4, "advmod"))
    rows.append(row("?", "?", "PUNCT", 4, "punct"))
    return text, rows


def q_who(benef, n, ent_pl, verb="gave", lemma="give"):
    text = f"Who {verb} {benef} {n} {ent_pl}?"
    rows = [row("Who", "who", "PRON", 2, "nsubj"),
            row(verb, lemma, "VERB", 0, "root"),
            row(benef, benef.lower(), "PROPN", 2, "iobj"),
            row(str(n), str(n), "NUM", 5, "nummod"),
            row(ent_pl, ent_pl, "NOUN", 2, "obj"),
            row("?", "?", "PUNCT", 2, "punct")]
    return text, rows


def q_what(holder, benef):
    text = f"What did {holder} give {benef}?"
    rows = [row("What", "what", "PRON", 4, "obj"),
            row("did", "do", "AUX", 4, "aux"),
            row(holder, holder.lower(), "PROPN", 4, "nsubj"),
            row("give", "give", "VERB", 0, "root"),
            row(benef, benef.lower(), "PROPN", 4, "iobj"),
            row("?", "?", "PUNCT", 4, "punct")]
    return text, rows


def build_problems():
    """(id, sentences, question, answer, equation) plus parse blocks."""
    problems = []

    def add(pid, parts, answer, equation=None):
        *body, question = parts
        problems.append({
            "id": pid,
            "body": " ".join(t for t, _ in body),
            "question": question[0],
            "answer": answer,
            "equation": equation,
            "blocks": [block(t, r) for t, r in parts],
        })

    transfer = [
        ("John", "Robert", "books", 5, 2),
        ("Mary", "Tom", "apples", 9, 4),
        ("Lisa", "Ben", "marbles", 12, 7),
        ("Anna", "Sam", "stickers", 20, 6),
        ("Kate", "Emma", "pencils", 8, 3),
    ]
    for k, (a, b, ent, x, y) in enumerate(transfer, start=1):
        add(f"t{k}", [had_s(a, x, ent), gave_s(a, b, y, ent),
                      q_howmany(a, ent)], x - y, f"x = {x} - {y}")
    for k, (a, b, ent, x, y) in enumerate(transfer[:4], start=1):
        add(f"b{k}", [had_s(a, x, ent), gave_s(a, b, y, ent),
                      q_howmany(b, ent)], y)
    for k, (a, b, ent, x, y) in enumerate(transfer[:4], start=1):
        add(f"g{k}", [had_s(a, x, ent), gave_s(a, b, y, ent),
                      q_there(ent)], x)
    for k, (a, b, ent, x, y) in enumerate(transfer[:4], start=1):
        add(f"w{k}", [had_s(a, x, ent), gave_s(a, b, y, ent),
                      q_who(b, y, ent)], a)
    singular = {"books": "book", "apples": "apple", "marbles": "marble",
                "stickers": "sticker", "pencils": "pencil",
                "shells": "shell", "coins": "coin", "cookies": "cookie",
                "trees": "tree", "balloons": "balloon", "dollars": "dollar",
                "crayons": "crayon", "cards": "card", "pies": "pie",
                "toys": "toy"}
    for k, (a, b, ent, x, y) in enumerate(transfer[:3], start=1):
        add(f"e{k}", [had_s(a, x, ent), gave_s(a, b, y, ent),
                      q_what(a, b)], singular[ent])

    gains = [
        ("Emma", "found", "find", "shells", 6, 4),
        ("Sam", "received", "receive", "cards", 3, 5),
        ("Tom", "bought", "buy", "toys", 2, 7),
        ("Mary", "collected", "collect", "coins", 10, 12),
        ("Ben", "earned", "earn", "dollars", 15, 9),
    ]
    for k, (a, verb, lemma, ent, x, y) in enumerate(gains, start=1):
        add(f"a{k}", [had_s(a, x, ent), action_s(a, verb, lemma, y, ent),
                      q_howmany(a, ent)], x + y, f"x = {x} + {y}")

    losses = [
        ("John", "lost", "lose", "marbles", 14, 5),
        ("Sara", "ate", "eat", "cookies", 9, 3),
        ("Kate", "spent", "spend", "dollars", 20, 8),
        ("Lisa", "dropped", "drop", "crayons", 11, 4),
        ("Anna", "sold", "sell", "pies", 16, 6),
    ]
    for k, (a, verb, lemma, ent, x, y) in enumerate(losses, start=1):
        if verb == "sold":
            parts = [had_s(a, x, ent), gave_s(a, "Tom", y, ent,
                                              verb="sold", lemma="sell"),
                     q_howmany(a, ent)]
        else:
            parts = [had_s(a, x, ent), action_s(a, verb, lemma, y, ent),
                     q_howmany(a, ent)]
        add(f"l{k}", parts, x - y, f"x = {x} - {y}")

    creates = [("garden", "gardener", "planted", "plant", "trees", 4, 3),
               ("shelf", "baker", "baked", "bake", "pies", 5, 6),
               ("box", "builder", "built", "build", "toys", 7, 2)]
    for k, (cont, agent, verb, lemma, ent, x, y) in enumerate(creates, start=1):
        add(f"c{k}", [contained_s(cont, x, ent),
                      agent_action_s(agent, verb, lemma, y, ent),
                      q_there(ent, now=True)], x + y, f"x = {y} + {x}")

    mults = [("Tom", "marbles", 4, 3), ("Lisa", "coins", 5, 2),
             ("Ben", "cards", 6, 4)]
    for k, (a, ent, x, y) in enumerate(mults, start=1):
        add(f"m{k}", [had_s(a, x, ent), multiply_s(a, y, ent),
                      q_howmany(a, ent)], x * y, f"x = {x} * {y}")

    divs = [("Anna", "cookies", 12, 3, "4"),
            ("John", "apples", 18, 6, "3"),
            ("Sara", "pies", 15, 4, "15/4")]
    for k, (a, ent, x, y, ans) in enumerate(divs, start=1):
        add(f"d{k}", [had_s(a, x, ent), divide_s(a, y, ent),
                      q_howmany(a, ent)], ans, f"x = {x} / {y}")

    attrs = [("Mary", "Tom", "balloons", "red", "blue", 7, 4, 2),
             ("Ben", "Kate", "marbles", "green", "white", 10, 5, 6),
             ("Emma", "Sam", "cards", "shiny", "old", 9, 8, 3)]
    for k, (a, b, ent, c1, c2, x, y, z) in enumerate(attrs, start=1):
        add(f"f{k}", [had_s(a, x, ent, attr=c1), had_s(a, y, ent, attr=c2),
                      gave_s(a, b, z, ent, attr=c1),
                      q_howmany(a, ent, attr=c1)], x - z, f"x = {x} - {z}")

    return problems


def build_error_problems():
    problems = []
    # parser wrongly tags "now" as the question's object
    mis_q_text = "How many Pokemon cards does Jason have now?"
    mis_q_rows = [row("How", "how", "ADV", 2, "advmod"),
                  row("many", "many", "ADJ", 4, "amod"),
                  row("Pokemon", "pokemon", "PROPN", 4, "compound"),
                  row("cards", "card", "NOUN", 7, "dep"),
                  row("does", "do", "AUX", 7, "aux"),
                  row("Jason", "jason", "PROPN", 7, "nsubj"),
                  row("have", "have", "VERB", 0, "root"),
                  row("now", "now", "ADV", 7, "obj"),
                  row("?", "?", "PUNCT", 7, "punct")]
    parts = [had_s("Jason", 9, "cards"),
             gave_s("Jason", "Emma", 4, "cards"),
             (mis_q_text, mis_q_rows)]
    problems.append({
        "id": "misparse",
        "body": " ".join(t for t, _ in parts[:2]),
        "question": mis_q_text,
        "answer": "5",
        "equation": None,
        "blocks": [block(t, r) for t, r in parts],
    })

    # unit conversion requires world knowledge the solver does not have
    uc_q_text = "How many days are there in a week?"
    uc_q_rows = [row("How", "how", "ADV", 2, "advmod"),
                 row("many", "many", "ADJ", 3, "amod"),
                 row("days", "day", "NOUN", 4, "nsubj"),
                 row("are", "be", "VERB", 0, "root"),
                 row("there", "there", "PRON", 4, "expl"),
                 row("in", "in", "ADP", 8, "case"),
                 row("a", "a", "DET", 8, "det"),
                 row("week", "week", "NOUN", 4, "nmod:case"),
                 row("?", "?", "PUNCT", 4, "punct")]
    parts = [had_s("Sara", 3, "books"), (uc_q_text, uc_q_rows)]
    problems.append({
        "id": "unitconv",
        "body": parts[0][0],
        "question": uc_q_text,
        "answer": "7",
        "equation": None,
        "blocks": [block(t, r) for t, r in parts],
    })
    return problems


def write_suite(problems, jsonl_path, parses_dir):
    os.makedirs(parses_dir, exist_ok=True)
    with open(jsonl_path, "w", encoding="utf-8", newline="\n") as fh:
        for prob in problems:
            record = {"id": prob["id"], "body": prob["body"],
                      "question": prob["question"],
                      "answer": str(prob["answer"])}
            if prob["equation"]:
                record["equation"] = prob["equation"]
            fh.write(json.dumps(record, sort_keys=True) + "\n")
            conllu = "\n\n".join(prob["blocks"]) + "\n"
            with open(os.path.join(parses_dir, f"{prob['id']}.conllu"),
                      "w", encoding="utf-8", newline="\n") as pf:
                pf.write(conllu)


def main():
    os.makedirs(FIXTURES, exist_ok=True)
    problems = build_problems()
    write_suite(problems, os.path.join(FIXTURES, "problems.jsonl"),
                os.path.join(FIXTURES, "parses"))
    errors = build_error_problems()
    write_suite(errors, os.path.join(FIXTURES, "error_problems.jsonl"),
                os.path.join(FIXTURES, "parses"))

    write_frame_corpus(os.path.join(FIXTURES, "frame_corpus.jsonl"),
                       generate_corpus(per_class=20, seed=0))

    with open(os.path.join(FIXTURES, "kappa_unanimous.txt"), "w",
              encoding="utf-8", newline="\n") as fh:
        for _ in range(6):
            fh.write("3 0 0\n")

    print(f"wrote {len(problems)} curated problems, "
          f"{len(errors)} error fixtures")


if __name__ == "__main__":
    main()
