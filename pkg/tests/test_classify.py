import math
import os
import random

import numpy as np
import pytest

from framesolve.classify import (FEATURE_MODES, FrameLexicon,
                                 FrameTypeClassifier, TfidfFeaturizer,
                                 extract_ngrams, predict_frame)
from framesolve.depparse import fallback_extract
from framesolve.errors import (EmptyCorpus, SingleClassCorpus,
                               UnsupportedSentence)
from framesolve.textnorm import tokenize


def test_extract_ngrams_modes():
    assert extract_ngrams("John had books", "uni") == ["john", "had", "books"]
    assert extract_ngrams("a b c", "uni-bi") == \
        ["a", "b", "c", "a b", "b c"]
    assert extract_ngrams("ab", "char2-6") == ["ab"]
    grams = extract_ngrams("abc", "char3-6")
    assert grams == ["abc"]
    with pytest.raises(ValueError):
        extract_ngrams("x", "char1-9")


def test_idf_single_sentence():
    feat = TfidfFeaturizer(mode="uni").fit(["a b"])
    assert sorted(feat.vocabulary_) == ["a", "b"]
    assert feat.idf_ == pytest.approx([1.0, 1.0], abs=1e-12)


def test_idf_hand_computed_two_sentences():
    feat = TfidfFeaturizer(mode="uni").fit(["a b", "a c"])
    vocab = feat.vocabulary_
    assert feat.idf_[vocab["a"]] == pytest.approx(1.0, abs=1e-9)
    assert feat.idf_[vocab["b"]] == pytest.approx(1.4054651081081644, abs=1e-9)
    assert feat.idf_[vocab["c"]] == pytest.approx(1.4054651081081644, abs=1e-9)


def test_vectorize_hand_computed():
    feat = TfidfFeaturizer(mode="uni").fit(["a b", "a c"])
    vec = feat.vectorize("a a b")
    vocab = feat.vocabulary_
    assert vec[vocab["a"]] == pytest.approx(0.8181802073667197, abs=1e-9)
    assert vec[vocab["b"]] == pytest.approx(0.5749618667993135, abs=1e-9)
    assert vec[vocab["c"]] == pytest.approx(0.0, abs=1e-12)


def test_vectorize_norm_contract():
    rng = random.Random(5)
    corpus = [" ".join(rng.choices("red blue give take book pen".split(),
                                   k=rng.randrange(2, 7))) for _ in range(30)]
    for mode in FEATURE_MODES:
        feat = TfidfFeaturizer(mode=mode).fit(corpus)
        for sent in corpus + ["zzz qqq", ""]:
            vec = feat.vectorize(sent)
            assert np.all(np.isfinite(vec))
            norm = np.linalg.norm(vec)
            assert norm == pytest.approx(1.0, abs=1e-9) or norm == 0.0


def test_vectorize_unknown_ngrams_zero():
    feat = TfidfFeaturizer(mode="uni").fit(["a b", "a c"])
    assert np.all(feat.vectorize("x y z") == 0.0)


def test_fit_empty_corpus():
    with pytest.raises(EmptyCorpus):
        TfidfFeaturizer().fit([])


def test_estimator_params_round_trip():
    feat = TfidfFeaturizer(mode="uni-bi", min_df=2)
    assert feat.get_params() == {"mode": "uni-bi", "lowercase": True,
                                 "min_df": 2}
    feat.set_params(min_df=1)
    assert feat.min_df == 1
    with pytest.raises(ValueError):
        feat.set_params(bogus=3)
    clf = FrameTypeClassifier(epochs=10)
    assert clf.get_params()["epochs"] == 10


SEPARABLE = (
    [("alpha beta", "x"), ("beta gamma", "x"), ("alpha gamma", "x"),
     ("gamma beta alpha", "x"), ("beta alpha", "x"),
     ("delta epsilon", "y"), ("epsilon zeta", "y"), ("delta zeta", "y"),
     ("zeta epsilon delta", "y"), ("epsilon delta", "y")])


def test_separable_corpus_perfect_training_accuracy():
    texts = [t for t, _ in SEPARABLE]
    labels = [l for _, l in SEPARABLE]
    clf = FrameTypeClassifier(mode="uni", epochs=50, seed=3).fit(texts, labels)
    assert clf.predict(texts) == labels


def test_single_class_rejected():
    with pytest.raises(SingleClassCorpus):
        FrameTypeClassifier().fit(["a", "b"], ["same", "same"])


def test_training_determinism(tmp_path):
    texts = [t for t, _ in SEPARABLE]
    labels = [l for _, l in SEPARABLE]
    paths = []
    for k in range(2):
        clf = FrameTypeClassifier(mode="uni", epochs=50, seed=7)
        clf.fit(texts, labels)
        path = tmp_path / f"model{k}.model"
        clf.save(path)
        paths.append(path)
    assert paths[0].read_bytes() == paths[1].read_bytes()


def test_save_load_round_trip(tmp_path):
    texts = [t for t, _ in SEPARABLE]
    labels = [l for _, l in SEPARABLE]
    clf = FrameTypeClassifier(mode="uni-bi", epochs=20, seed=1)
    clf.fit(texts, labels)
    path = tmp_path / "m.model"
    clf.save(path)
    loaded = FrameTypeClassifier.load(path)
    assert loaded.predict(texts) == clf.predict(texts)
    path2 = tmp_path / "m2.model"
    loaded.save(path2)
    assert path.read_bytes() == path2.read_bytes()


def test_load_rejects_wrong_magic(tmp_path):
    path = tmp_path / "bad.model"
    path.write_text("NOT-A-MODEL\n{}\n")
    with pytest.raises(ValueError):
        FrameTypeClassifier.load(path)


def test_scaling_invariance_of_argmax():
    texts = [t for t, _ in SEPARABLE]
    labels = [l for _, l in SEPARABLE]
    clf = FrameTypeClassifier(mode="uni", epochs=50, seed=2).fit(texts, labels)
    before = clf.predict(texts + ["alpha zeta", "gamma delta"])
    clf.weights_ = clf.weights_ * 3.75
    clf.biases_ = clf.biases_ * 3.75
    after = clf.predict(texts + ["alpha zeta", "gamma delta"])
    assert before == after


def test_tie_breaks_by_lowest_class_index():
    clf = FrameTypeClassifier(mode="uni")
    clf.featurizer_ = TfidfFeaturizer(mode="uni").fit(["a b"])
    clf.classes_ = ["earliest", "later", "latest"]
    clf.weights_ = np.zeros((3, 2))
    clf.biases_ = np.zeros(3)
    assert clf.predict_one("a b")[0] == "earliest"


def test_lexicon_precedence_skips_classifier(lexicon):
    texts = [t for t, _ in SEPARABLE]
    labels = [l for _, l in SEPARABLE]
    clf = FrameTypeClassifier(mode="uni", epochs=5, seed=0).fit(texts, labels)
    parse = fallback_extract(tokenize("John gave Robert 2 books."),
                             lexicon.verbs)
    calls_before = clf.n_predict_calls_
    frame_type, score, via = predict_frame(clf, lexicon, parse)
    assert (frame_type, via) == ("transfer_goods", "Lexicon")
    assert score == math.inf
    assert clf.n_predict_calls_ == calls_before


def _unknown_verb_parse(text, words, root_index):
    from framesolve.depparse import read_conllu
    lines = [f"# text = {text}"]
    for i, w in enumerate(words, start=1):
        head = 0 if i == root_index else root_index
        rel = "root" if i == root_index else "dep"
        lines.append(f"{i}\t{w}\t{w.lower()}\t_\t_\t_\t{head}\t{rel}\t_\t_")
    return read_conllu("\n".join(lines) + "\n")[0]


def test_unknown_verb_without_classifier(lexicon):
    parse = _unknown_verb_parse("John zorped 2 books.",
                                ["John", "zorped", "2", "books", "."], 2)
    with pytest.raises(UnsupportedSentence):
        predict_frame(None, lexicon, parse)


def test_unknown_verb_uses_classifier(lexicon):
    texts = [t for t, _ in SEPARABLE]
    labels = [l for _, l in SEPARABLE]
    clf = FrameTypeClassifier(mode="uni", epochs=50, seed=0).fit(texts, labels)
    parse = _unknown_verb_parse("he alpha beta gamma zorped it",
                                ["he", "alpha", "beta", "gamma", "zorped",
                                 "it"], 5)
    frame_type, _, via = predict_frame(clf, lexicon, parse)
    assert via == "Classifier"
    assert frame_type == "x"


def test_lexicon_validates_against_taxonomy(taxonomy):
    with pytest.raises(ValueError):
        FrameLexicon({"flurb": "not_a_frame_type"}, taxonomy)
    lex = FrameLexicon({"give": "transfer_goods"}, taxonomy)
    assert "give" in lex and lex.get("give") == "transfer_goods"
