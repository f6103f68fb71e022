"""Command-line interface: solve, train, eval-frames, eval-solver, kappa, annotate."""

import argparse
import json
import os
import sys
from fractions import Fraction

from . import evaluate, synth
from .classify import FrameLexicon, FrameTypeClassifier, FEATURE_MODES
from .depparse import read_conllu
from .errors import FramesolveError, PipelineError
from .frames import Taxonomy
from .pipeline import Solver, default_data_path

EXIT_OK = 0
EXIT_USAGE = 1
EXIT_UNSOLVED = 2


def _load_context(args):
    taxonomy = Taxonomy.load(args.taxonomy or default_data_path("taxonomy.tsv"))
    lexicon = FrameLexicon.load(args.lexicon or default_data_path("lexicon.tsv"),
                                taxonomy)
    classifier = None
    if getattr(args, "model", None):
        classifier = FrameTypeClassifier.load(args.model)
    return taxonomy, lexicon, classifier


def _read_parses(path):
    with open(path, encoding="utf-8") as fh:
        return read_conllu(fh)


def _render_answer(answer, fmt, dump=None):
    if fmt == "json":
        record = {
            "answer": answer.value_str(),
            "equation": answer.equation,
            "steps": list(answer.steps),
            "warnings": list(answer.warnings),
        }
        if dump is not None:
            record["graph"] = dump
        return json.dumps(record, sort_keys=True, separators=(",", ":"))
    lines = [f"ANSWER: {answer.value_str()}"]
    if answer.equation:
        lines.append(f"EQUATION: {answer.equation}")
    for k, step in enumerate(answer.steps, start=1):
        lines.append(f"STEP {k}: {step}")
    for warning in answer.warnings:
        lines.append(f"WARNING: {warning}")
    if dump is not None:
        lines.append(dump)
    return "\n".join(lines)


def cmd_solve(args):
    if args.text is not None:
        text = args.text
    elif args.input and args.input != "-":
        with open(args.input, encoding="utf-8") as fh:
            text = fh.read()
    else:
        text = sys.stdin.read()
    if not text.strip():
        print("error: EmptyInput: no problem text given", file=sys.stderr)
        return EXIT_USAGE

    taxonomy, lexicon, classifier = _load_context(args)
    parses = _read_parses(args.parses) if args.parses else None
    solver = Solver(lexicon, taxonomy, classifier)
    answer, graph = solver.solve(text, parses=parses)
    dump = graph.dump() if args.dump_graph else None
    print(_render_answer(answer, args.format, dump))
    return EXIT_OK


def cmd_train(args):
    if args.features not in FEATURE_MODES:
        print(f"error: unknown feature mode {args.features!r}; choose from "
              f"{sorted(FEATURE_MODES)}", file=sys.stderr)
        return EXIT_USAGE
    examples = evaluate.read_frame_corpus(args.corpus)
    train = examples
    test = []
    if args.eval_split is not None:
        train, test = evaluate.split_corpus(
            examples, args.eval_split, args.seed,
            labels=[e.label for e in examples])
    clf = FrameTypeClassifier(mode=args.features, epochs=args.epochs,
                              reg=args.reg, seed=args.seed)
    clf.fit([e.text for e in train], [e.label for e in train])
    clf.save(args.out)
    print(f"trained on {len(train)} examples "
          f"({len(clf.classes_)} classes); model written to {args.out}")
    if test:
        predicted = clf.predict([e.text for e in test])
        report = evaluate.evaluate_frames([e.label for e in test], predicted)
        print(report.render_text())
    return EXIT_OK


def cmd_eval_frames(args):
    gold = evaluate.read_frame_corpus(args.gold)
    if args.pred:
        pred = evaluate.read_frame_corpus(args.pred)
        predicted = [e.label for e in pred]
    elif args.model:
        clf = FrameTypeClassifier.load(args.model)
        predicted = clf.predict([e.text for e in gold])
    else:
        print("error: need --pred or --model", file=sys.stderr)
        return EXIT_USAGE
    report = evaluate.evaluate_frames([e.label for e in gold], predicted)
    if args.report == "json":
        print(json.dumps(report.to_dict(), sort_keys=True,
                         separators=(",", ":")))
    else:
        print(report.render_text())
    return EXIT_OK


def cmd_eval_solver(args):
    taxonomy, lexicon, classifier = _load_context(args)
    solver = Solver(lexicon, taxonomy, classifier)
    problems = evaluate.read_problems(args.problems, ai2=args.ai2)

    def solve_one(problem):
        parses = None
        if args.parses_dir:
            path = os.path.join(args.parses_dir, f"{problem.id}.conllu")
            if os.path.exists(path):
                parses = _read_parses(path)
        return solver.solve_problem(problem, parses=parses)

    accuracy, per_problem = evaluate.evaluate_solver(problems, solve_one)
    if args.report == "json":
        print(json.dumps({"accuracy": accuracy, "per_problem": per_problem},
                         sort_keys=True, separators=(",", ":")))
    else:
        for rec in per_problem:
            status = "ok" if rec["correct"] else "FAIL"
            detail = rec["predicted"] if rec["error"] is None else rec["error"]
            print(f"{rec['id']:<12} {status:<5} {detail}")
        print(f"accuracy {accuracy:.4f} "
              f"({sum(r['correct'] for r in per_problem)}/{len(per_problem)})")
    return EXIT_OK


def cmd_kappa(args):
    rows = []
    with open(args.ratings, encoding="utf-8") as fh:
        for line in fh:
            line = line.strip()
            if not line or line.startswith("#"):
                continue
            rows.append([int(x) for x in line.replace(",", " ").split()])
    raters = args.raters if args.raters else (sum(rows[0]) if rows else 0)
    kappa = evaluate.compute_fleiss_kappa(rows, raters)
    print(f"fleiss_kappa {kappa:.6f}")
    return EXIT_OK


def cmd_annotate(args):
    taxonomy = Taxonomy.load(args.taxonomy or default_data_path("taxonomy.tsv"))
    names = taxonomy.names
    with open(args.input, encoding="utf-8") as fh:
        sentences = [line.strip() for line in fh if line.strip()]
    done = 0
    if os.path.exists(args.output):
        with open(args.output, encoding="utf-8") as fh:
            done = sum(1 for line in fh if line.strip())
    if done >= len(sentences):
        print("nothing left to annotate")
        return EXIT_OK
    menu = "\n".join(f"{i + 1:>3}. {name}" for i, name in enumerate(names))
    with open(args.output, "a", encoding="utf-8", newline="\n") as out:
        for sent in sentences[done:]:
            print(menu)
            print(f"SENTENCE: {sent}")
            choice = input("frame number (blank to stop): ").strip()
            if not choice:
                print(f"stopped; {done} sentences annotated")
                return EXIT_OK
            try:
                idx = int(choice) - 1
                label = names[idx]
            except (ValueError, IndexError):
                print("invalid choice", file=sys.stderr)
                return EXIT_USAGE
            out.write(json.dumps({"text": sent, "frame": label},
                                 sort_keys=True) + "\n")
            out.flush()
            done += 1
    print(f"annotated {done} sentences")
    return EXIT_OK


def cmd_make_corpus(args):
    examples = synth.generate_corpus(per_class=args.per_class, seed=args.seed)
    evaluate.write_frame_corpus(args.out, examples)
    print(f"wrote {len(examples)} synthetic examples to {args.out}")
    return EXIT_OK


def build_parser():
    parser = argparse.ArgumentParser(
        prog="framesolve",
        description="Frame-based arithmetic word problem solver")
    sub = parser.add_subparsers(dest="command", required=True)

    def add_common(p):
        p.add_argument("--lexicon", help="verb->frame TSV file")
        p.add_argument("--taxonomy", help="frame taxonomy TSV file")
        p.add_argument("--model", help="trained classifier model file")
        p.add_argument("--format", choices=["text", "json"], default="text")
        p.add_argument("--seed", type=int, default=0)

    p = sub.add_parser("solve", help="solve one word problem")
    add_common(p)
    p.add_argument("input", nargs="?", help="problem text file ('-' = stdin)")
    p.add_argument("--text", help="problem text on the command line")
    p.add_argument("--parses", help="CoNLL-U file aligned with the sentences")
    p.add_argument("--explain", action="store_true",
                   help="kept for compatibility; explanations always print")
    p.add_argument("--dump-graph", action="store_true")
    p.set_defaults(func=cmd_solve)

    p = sub.add_parser("train", help="train the frame classifier")
    add_common(p)
    p.add_argument("--corpus", required=True, help="frame JSONL corpus")
    p.add_argument("--features", default="uni",
                   help="uni | uni-bi | char2-6 | char3-6")
    p.add_argument("--epochs", type=int, default=50)
    p.add_argument("--reg", type=float, default=0.01)
    p.add_argument("--out", required=True, help="model output path")
    p.add_argument("--eval-split", type=float, default=None,
                   help="train fraction for a held-out evaluation")
    p.set_defaults(func=cmd_train)

    p = sub.add_parser("eval-frames", help="score frame predictions")
    add_common(p)
    p.add_argument("--gold", required=True)
    p.add_argument("--pred")
    p.add_argument("--report", choices=["text", "json"], default="text")
    p.set_defaults(func=cmd_eval_frames)

    p = sub.add_parser("eval-solver", help="run the solver over a problem set")
    add_common(p)
    p.add_argument("--problems", required=True, help="problem JSONL file")
    p.add_argument("--parses-dir", help="directory of <id>.conllu gold parses")
    p.add_argument("--ai2", action="store_true",
                   help="input uses AI2 arithmetic-question fields")
    p.add_argument("--report", choices=["text", "json"], default="text")
    p.set_defaults(func=cmd_eval_solver)

    p = sub.add_parser("kappa", help="Fleiss kappa from a count matrix")
    p.add_argument("--ratings", required=True,
                   help="whitespace/comma separated item x category counts")
    p.add_argument("--raters", type=int, default=None)
    p.set_defaults(func=cmd_kappa)

    p = sub.add_parser("annotate", help="label sentences with frame types")
    add_common(p)
    p.add_argument("--input", required=True, help="one sentence per line")
    p.add_argument("--output", required=True, help="frame JSONL to append to")
    p.set_defaults(func=cmd_annotate)

    p = sub.add_parser("make-corpus", help="emit the synthetic frame corpus")
    p.add_argument("--per-class", type=int, default=20)
    p.add_argument("--seed", type=int, default=0)
    p.add_argument("--out", required=True)
    p.set_defaults(func=cmd_make_corpus)

    return parser


def main(argv=None):
    parser = build_parser()
    try:
        args = parser.parse_args(argv)
    except SystemExit as exc:
        return EXIT_USAGE if exc.code not in (0, None) else EXIT_OK
    try:
        return args.func(args)
    except PipelineError as exc:
        print(f"error: {type(exc).__name__}: {exc}", file=sys.stderr)
        return EXIT_UNSOLVED
    except (FramesolveError, OSError, ValueError) as exc:
        print(f"error: {type(exc).__name__}: {exc}", file=sys.stderr)
        return EXIT_USAGE


if __name__ == "__main__":
    sys.exit(main())
