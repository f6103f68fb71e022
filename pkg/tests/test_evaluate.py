import json
import random
from fractions import Fraction

import pytest

from framesolve.errors import (EmptyCorpus, LengthMismatch, RowSumMismatch)
from framesolve.evaluate import (FrameExample, WordProblem, answers_equal,
                                 compute_fleiss_kappa, evaluate_frames,
                                 evaluate_solver, parse_gold_answer,
                                 read_frame_corpus, read_problems,
                                 split_corpus, write_frame_corpus)

from .oracles import fleiss_kappa_bruteforce


def test_perfect_agreement_is_all_ones():
    labels = ["a", "b", "b", "c", "a"]
    report = evaluate_frames(labels, labels)
    assert report.accuracy == 1.0
    assert report.macro == (1.0, 1.0, 1.0)
    assert report.weighted == (1.0, 1.0, 1.0)
    for p, r, f1, _ in report.per_class.values():
        assert (p, r, f1) == (1.0, 1.0, 1.0)


def test_hand_computed_confusion():
    report = evaluate_frames(["a", "a", "b"], ["a", "b", "b"])
    pa, ra, fa, sa = report.per_class["a"]
    pb, rb, fb, sb = report.per_class["b"]
    assert (pa, ra, sa) == (1.0, 0.5, 2)
    assert fa == pytest.approx(2 / 3)
    assert (pb, rb, sb) == (0.5, 1.0, 1)
    assert fb == pytest.approx(2 / 3)
    assert report.accuracy == pytest.approx(2 / 3)


def test_f1_is_harmonic_mean():
    rng = random.Random(8)
    labels = ["u", "v", "w"]
    gold = [rng.choice(labels) for _ in range(60)]
    pred = [rng.choice(labels) for _ in range(60)]
    report = evaluate_frames(gold, pred)
    for p, r, f1, _ in report.per_class.values():
        expected = 0.0 if p + r == 0 else 2 * p * r / (p + r)
        assert f1 == pytest.approx(expected, abs=1e-12)
    supports = sum(v[3] for v in report.per_class.values())
    assert supports == 60


def test_micro_accuracy_equals_weighted_recall():
    rng = random.Random(17)
    labels = ["a", "b", "c", "d"]
    for _ in range(20):
        n = rng.randrange(5, 40)
        gold = [rng.choice(labels) for _ in range(n)]
        pred = [rng.choice(labels) for _ in range(n)]
        report = evaluate_frames(gold, pred)
        assert report.accuracy == pytest.approx(report.weighted[1], abs=1e-12)


def test_zero_division_notes():
    report = evaluate_frames(["a", "a"], ["b", "b"])
    assert report.per_class["a"][0] == 0.0  # no predictions of a
    assert report.per_class["b"][1] == 0.0  # no gold b
    assert report.notes


def test_length_mismatch():
    with pytest.raises(LengthMismatch):
        evaluate_frames(["a"], ["a", "b"])
    with pytest.raises(LengthMismatch):
        evaluate_frames([], [])


def test_kappa_unanimous_is_exactly_one():
    assert compute_fleiss_kappa([[3, 0], [3, 0], [0, 3]], 3) == 1.0
    assert compute_fleiss_kappa([[4, 0]] * 10, 4) == 1.0


def test_kappa_chance_level_is_zero():
    ratings = [[2, 0], [0, 2], [1, 1], [1, 1]]
    assert compute_fleiss_kappa(ratings, 2) == pytest.approx(0.0, abs=1e-12)


def test_kappa_row_sum_checked():
    with pytest.raises(RowSumMismatch):
        compute_fleiss_kappa([[2, 0], [1, 0]], 2)
    with pytest.raises(RowSumMismatch):
        compute_fleiss_kappa([], 2)
    with pytest.raises(RowSumMismatch):
        compute_fleiss_kappa([[1, 0]], 1)


def test_kappa_matches_bruteforce_oracle():
    rng = random.Random(123)
    for _ in range(50):
        raters = rng.randint(2, 6)
        n_items = rng.randint(2, 12)
        n_cats = rng.randint(2, 5)
        ratings = []
        for _ in range(n_items):
            row = [0] * n_cats
            for _ in range(raters):
                row[rng.randrange(n_cats)] += 1
            ratings.append(row)
        got = compute_fleiss_kappa(ratings, raters)
        want = fleiss_kappa_bruteforce(ratings, raters)
        assert got == pytest.approx(want, abs=1e-9), ratings


def test_split_is_deterministic():
    data = list(range(10))
    a = split_corpus(data, 0.8, seed=1)
    b = split_corpus(data, 0.8, seed=1)
    assert a == b
    train, test = a
    assert len(train) == 8 and len(test) == 2
    assert sorted(train + test) == data


def test_split_stratified_two_classes():
    data = [f"x{i}" for i in range(10)] + [f"y{i}" for i in range(10)]
    labels = ["x"] * 10 + ["y"] * 10
    train, test = split_corpus(data, 0.8, seed=5, labels=labels)
    assert sum(1 for d in train if d.startswith("x")) == 8
    assert sum(1 for d in train if d.startswith("y")) == 8
    assert len(test) == 4


def test_split_matches_historical_corpus_ratio():
    train, test = split_corpus(list(range(504)), 0.88, seed=0)
    assert (len(train), len(test)) == (444, 60)


def test_split_rejects_bad_fraction():
    with pytest.raises(ValueError):
        split_corpus([1, 2], 1.0, seed=0)
    with pytest.raises(EmptyCorpus):
        split_corpus([], 0.5, seed=0)


def test_gold_answer_parsing():
    assert parse_gold_answer("3") == Fraction(3)
    assert parse_gold_answer(2.5) == Fraction(5, 2)
    assert parse_gold_answer("15/4") == Fraction(15, 4)
    assert parse_gold_answer("John") == "John"
    assert answers_equal(Fraction(3), Fraction(3))
    assert answers_equal("john", "John ")
    assert not answers_equal(Fraction(3), "3")


def test_evaluate_solver_records_errors():
    problems = [
        WordProblem(id="ok", body="b", question="q?", gold_answer=Fraction(3)),
        WordProblem(id="boom", body="b", question="q?", gold_answer=Fraction(1)),
    ]

    class FakeAnswer:
        def __init__(self, v):
            self.value = v

        def value_str(self):
            return str(self.value)

    def solve(problem):
        if problem.id == "boom":
            raise RuntimeError("backend exploded")
        return FakeAnswer(Fraction(3))

    accuracy, records = evaluate_solver(problems, solve)
    assert accuracy == 0.5
    by_id = {r["id"]: r for r in records}
    assert by_id["ok"]["correct"]
    assert "RuntimeError" in by_id["boom"]["error"]
    with pytest.raises(EmptyCorpus):
        evaluate_solver([], solve)


def test_frame_corpus_round_trip(tmp_path):
    examples = [FrameExample("John had 5 books.", "possess"),
                FrameExample("He lost 2 pens.", "lose")]
    path = tmp_path / "corpus.jsonl"
    write_frame_corpus(path, examples)
    assert read_frame_corpus(path) == examples


def test_read_problems_jsonl(tmp_path):
    path = tmp_path / "p.jsonl"
    path.write_text(json.dumps({"id": "p1", "body": "B.", "question": "Q?",
                                "answer": "4", "equation": "x = 2 + 2"})
                    + "\n")
    probs = read_problems(path)
    assert probs[0].id == "p1"
    assert probs[0].gold_answer == Fraction(4)
    assert probs[0].gold_equation == "x = 2 + 2"


def test_read_problems_ai2_format(tmp_path):
    path = tmp_path / "ai2.json"
    records = [{
        "iIndex": 42,
        "sQuestion": "John had 5 books. John gave Robert 2 books. "
                     "How many books does John have now?",
        "lSolutions": [3.0],
        "lEquations": ["X=5-2"],
    }]
    path.write_text(json.dumps(records))
    probs = read_problems(path)
    assert len(probs) == 1
    p = probs[0]
    assert p.id == "42"
    assert p.body == "John had 5 books. John gave Robert 2 books."
    assert p.question == "How many books does John have now?"
    assert p.gold_answer == Fraction(3)
    assert p.gold_equation == "X=5-2"
