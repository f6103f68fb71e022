"""Metrics, inter-annotator agreement, corpus splits, solver harness."""

import json
import random
from dataclasses import dataclass, field
from fractions import Fraction

from .errors import EmptyCorpus, FramesolveError, LengthMismatch, RowSumMismatch


@dataclass(frozen=True)
class FrameExample:
    text: str
    label: str


@dataclass(frozen=True)
class WordProblem:
    id: str
    body: str
    question: str
    gold_answer: object  # Fraction or str
    gold_equation: str = None


@dataclass
class MetricsReport:
    per_class: dict          # label -> (precision, recall, f1, support)
    macro: tuple             # (p, r, f1)
    weighted: tuple          # (p, r, f1)
    accuracy: float
    notes: list = field(default_factory=list)

    def to_dict(self):
        return {
            "per_class": {k: {"precision": v[0], "recall": v[1],
                              "f1": v[2], "support": v[3]}
                          for k, v in self.per_class.items()},
            "macro": {"precision": self.macro[0], "recall": self.macro[1],
                      "f1": self.macro[2]},
            "weighted": {"precision": self.weighted[0],
                         "recall": self.weighted[1],
                         "f1": self.weighted[2]},
            "accuracy": self.accuracy,
            "notes": self.notes,
        }

    def render_text(self):
        lines = [f"{'label':<20} {'prec':>7} {'rec':>7} {'f1':>7} {'support':>8}"]
        for label in sorted(self.per_class):
            p, r, f1, s = self.per_class[label]
            lines.append(f"{label:<20} {p:>7.3f} {r:>7.3f} {f1:>7.3f} {s:>8}")
        lines.append(f"{'macro':<20} {self.macro[0]:>7.3f} "
                     f"{self.macro[1]:>7.3f} {self.macro[2]:>7.3f}")
        lines.append(f"{'weighted':<20} {self.weighted[0]:>7.3f} "
                     f"{self.weighted[1]:>7.3f} {self.weighted[2]:>7.3f}")
        lines.append(f"accuracy {self.accuracy:.4f}")
        return "\n".join(lines)


def _f1(p, r):
    return 0.0 if p + r == 0 else 2 * p * r / (p + r)


def evaluate_frames(gold, predicted):
    """Per-class and averaged P/R/F1 from two aligned label lists."""
    if len(gold) != len(predicted):
        raise LengthMismatch(
            f"gold has {len(gold)} labels, predictions {len(predicted)}")
    if not gold:
        raise LengthMismatch("empty label lists")
    labels = sorted(set(gold) | set(predicted))
    notes = []
    per_class = {}
    correct = 0
    for g, p in zip(gold, predicted):
        if g == p:
            correct += 1
    for label in labels:
        tp = sum(1 for g, p in zip(gold, predicted) if g == label and p == label)
        fp = sum(1 for g, p in zip(gold, predicted) if g != label and p == label)
        fn = sum(1 for g, p in zip(gold, predicted) if g == label and p != label)
        support = tp + fn
        if tp + fp == 0:
            precision = 0.0
            notes.append(f"zero predictions for class {label!r}; precision=0")
        else:
            precision = tp / (tp + fp)
        if support == 0:
            recall = 0.0
            notes.append(f"no gold examples of class {label!r}; recall=0")
        else:
            recall = tp / support
        per_class[label] = (precision, recall, _f1(precision, recall), support)

    n_labels = len(labels)
    macro = tuple(sum(v[k] for v in per_class.values()) / n_labels
                  for k in range(3))
    total = len(gold)
    weighted = tuple(sum(v[k] * v[3] for v in per_class.values()) / total
                     for k in range(3))
    return MetricsReport(per_class=per_class, macro=macro, weighted=weighted,
                         accuracy=correct / total, notes=notes)


def compute_fleiss_kappa(ratings, raters_per_item):
    """Fleiss kappa from an item x category count matrix."""
    if raters_per_item < 2:
        raise RowSumMismatch("need at least 2 raters per item")
    n_items = len(ratings)
    if n_items == 0:
        raise RowSumMismatch("empty ratings matrix")
    n_cats = len(ratings[0])
    for i, row in enumerate(ratings):
        if len(row) != n_cats:
            raise RowSumMismatch(f"row {i} has {len(row)} categories")
        if sum(row) != raters_per_item:
            raise RowSumMismatch(
                f"row {i} sums to {sum(row)}, expected {raters_per_item}")
    n = raters_per_item
    p_bar = sum(
        (sum(c * c for c in row) - n) / (n * (n - 1)) for row in ratings
    ) / n_items
    marginals = [sum(row[j] for row in ratings) / (n_items * n)
                 for j in range(n_cats)]
    p_e = sum(m * m for m in marginals)
    if p_e >= 1.0:
        return 1.0
    return (p_bar - p_e) / (1 - p_e)


def split_corpus(examples, train_fraction, seed, labels=None):
    """Deterministic shuffled split, stratified by label when given."""
    examples = list(examples)
    if not examples:
        raise EmptyCorpus("nothing to split")
    if not 0 < train_fraction < 1:
        raise ValueError("train_fraction must be in (0, 1)")
    rng = random.Random(seed)
    if labels is None:
        order = list(range(len(examples)))
        rng.shuffle(order)
        n_train = round(train_fraction * len(examples))
        n_train = min(max(n_train, 1), len(examples) - 1)
        train_idx = sorted(order[:n_train])
        test_idx = sorted(order[n_train:])
    else:
        if len(labels) != len(examples):
            raise LengthMismatch("labels and examples differ in length")
        by_label = {}
        for i, label in enumerate(labels):
            by_label.setdefault(label, []).append(i)
        train_idx, test_idx = [], []
        for label in sorted(by_label):
            idx = by_label[label]
            rng.shuffle(idx)
            if len(idx) < 2:
                train_idx.extend(idx)  # too small to stratify
                continue
            k = round(train_fraction * len(idx))
            k = min(max(k, 1), len(idx) - 1)
            train_idx.extend(idx[:k])
            test_idx.extend(idx[k:])
        train_idx.sort()
        test_idx.sort()
    train = [examples[i] for i in train_idx]
    test = [examples[i] for i in test_idx]
    return train, test


def parse_gold_answer(raw):
    if isinstance(raw, (int, float)):
        return Fraction(str(raw))
    text = str(raw).strip()
    try:
        return Fraction(text)
    except (ValueError, ZeroDivisionError):
        return text


def answers_equal(predicted, gold):
    if isinstance(gold, Fraction) and isinstance(predicted, Fraction):
        return predicted == gold
    if isinstance(gold, str) and isinstance(predicted, str):
        return predicted.strip().casefold() == gold.strip().casefold()
    return False


def evaluate_solver(problems, solve_fn):
    """Run solve_fn over every problem; failures never abort the run.

    solve_fn(problem) must return an Answer; its value is compared to the
    gold answer exactly (rationals) or case-insensitively (strings).
    """
    if not problems:
        raise EmptyCorpus("no problems to evaluate")
    per_problem = []
    correct = 0
    for prob in problems:
        record = {"id": prob.id, "predicted": None, "correct": False,
                  "error": None}
        try:
            answer = solve_fn(prob)
            record["predicted"] = answer.value_str()
            record["correct"] = answers_equal(answer.value, prob.gold_answer)
        except FramesolveError as exc:
            record["error"] = f"{type(exc).__name__}: {exc}"
        except Exception as exc:  # malformed problems still get a record
            record["error"] = f"{type(exc).__name__}: {exc}"
        if record["correct"]:
            correct += 1
        per_problem.append(record)
    return correct / len(problems), per_problem


# -- JSON Lines corpus formats --

def read_frame_corpus(path):
    examples = []
    with open(path, encoding="utf-8") as fh:
        for line_no, line in enumerate(fh, start=1):
            line = line.strip()
            if not line:
                continue
            try:
                rec = json.loads(line)
                examples.append(FrameExample(text=rec["text"],
                                             label=rec["frame"]))
            except (json.JSONDecodeError, KeyError) as exc:
                raise FramesolveError(
                    f"{path}:{line_no}: bad frame record ({exc})")
    if not examples:
        raise EmptyCorpus(f"no frame examples in {path}")
    return examples


def write_frame_corpus(path, examples):
    with open(path, "w", encoding="utf-8", newline="\n") as fh:
        for ex in examples:
            fh.write(json.dumps({"text": ex.text, "frame": ex.label},
                                sort_keys=True) + "\n")


def read_problems(path, ai2=False):
    """Load a problem set from JSONL (or an AI2-style JSON array).

    AI2 field mapping: iIndex -> id, sQuestion -> body + question (the
    last '?' sentence is the question), lSolutions[0] -> answer,
    lEquations[0] -> equation.
    """
    with open(path, encoding="utf-8") as fh:
        content = fh.read()
    records = []
    stripped = content.lstrip()
    if stripped.startswith("["):
        records = json.loads(content)
    else:
        for line_no, line in enumerate(content.splitlines(), start=1):
            line = line.strip()
            if not line:
                continue
            try:
                records.append(json.loads(line))
            except json.JSONDecodeError as exc:
                raise FramesolveError(f"{path}:{line_no}: bad JSON ({exc})")
    problems = []
    for i, rec in enumerate(records):
        if ai2 or "sQuestion" in rec:
            text = rec["sQuestion"].strip()
            cut = text.rfind("?")
            head = text[:cut + 1]
            split_at = max(head.rfind(". "), head.rfind("! "))
            body = head[:split_at + 1].strip() if split_at >= 0 else ""
            question = head[split_at + 1:].strip()
            solutions = rec.get("lSolutions") or []
            equations = rec.get("lEquations") or []
            problems.append(WordProblem(
                id=str(rec.get("iIndex", i)),
                body=body or question,
                question=question,
                gold_answer=parse_gold_answer(solutions[0]) if solutions else "",
                gold_equation=equations[0] if equations else None))
        else:
            problems.append(WordProblem(
                id=str(rec.get("id", i)),
                body=rec["body"],
                question=rec["question"],
                gold_answer=parse_gold_answer(rec["answer"]),
                gold_equation=rec.get("equation")))
    if not problems:
        raise EmptyCorpus(f"no problems in {path}")
    return problems
