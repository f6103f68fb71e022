"""Frame type identification: TF-IDF features + one-vs-rest linear model.

Both estimators follow the fit/transform/predict + get_params convention
so they compose with pipeline tooling; neither depends on sklearn.
"""

import json
import math
import random
from dataclasses import dataclass

import numpy as np

from .errors import EmptyCorpus, SingleClassCorpus, UnsupportedSentence
from .lemma import lemmatize

MODEL_MAGIC = "FRAMESOLVE-MODEL-v1"

FEATURE_MODES = {
    "uni": ("word", 1, 1),
    "uni-bi": ("word", 1, 2),
    "char2-6": ("char", 2, 6),
    "char3-6": ("char", 3, 6),
}


def check_fitted(estimator, attr):
    if getattr(estimator, attr, None) is None:
        raise RuntimeError(f"{type(estimator).__name__} is not fitted")


def _check_mode(mode):
    if mode not in FEATURE_MODES:
        raise ValueError(f"unknown feature mode {mode!r}; "
                         f"expected one of {sorted(FEATURE_MODES)}")


def extract_ngrams(sentence, mode, lowercase=True):
    _check_mode(mode)
    kind, lo, hi = FEATURE_MODES[mode]
    text = sentence.lower() if lowercase else sentence
    grams = []
    if kind == "word":
        words = text.split()
        for n in range(lo, hi + 1):
            for i in range(len(words) - n + 1):
                grams.append(" ".join(words[i:i + n]))
    else:
        for n in range(lo, hi + 1):
            for i in range(len(text) - n + 1):
                grams.append(text[i:i + n])
    return grams


class TfidfFeaturizer:
    """TF-IDF over word or character n-grams; rows are L2-normalized.

    idf(t) = ln((1 + N) / (1 + df(t))) + 1 where N is the corpus size.
    """

    def __init__(self, mode="uni", lowercase=True, min_df=1):
        self.mode = mode
        self.lowercase = lowercase
        self.min_df = min_df
        self.vocabulary_ = None
        self.idf_ = None

    def get_params(self, deep=True):
        return {"mode": self.mode, "lowercase": self.lowercase,
                "min_df": self.min_df}

    def set_params(self, **params):
        for key, value in params.items():
            if key not in self.get_params():
                raise ValueError(f"unknown parameter {key!r}")
            setattr(self, key, value)
        return self

    def fit(self, sentences):
        _check_mode(self.mode)
        sentences = list(sentences)
        if not sentences:
            raise EmptyCorpus("cannot fit TF-IDF on an empty corpus")
        df = {}
        for sent in sentences:
            for gram in set(extract_ngrams(sent, self.mode, self.lowercase)):
                df[gram] = df.get(gram, 0) + 1
        vocab = sorted(g for g, c in df.items() if c >= self.min_df)
        n = len(sentences)
        self.vocabulary_ = {g: i for i, g in enumerate(vocab)}
        self.idf_ = np.array(
            [math.log((1 + n) / (1 + df[g])) + 1 for g in vocab], dtype=float)
        return self

    def transform(self, sentences):
        check_fitted(self, "vocabulary_")
        rows = np.zeros((len(sentences), len(self.vocabulary_)), dtype=float)
        for r, sent in enumerate(sentences):
            for gram in extract_ngrams(sent, self.mode, self.lowercase):
                col = self.vocabulary_.get(gram)
                if col is not None:
                    rows[r, col] += 1.0
            rows[r] *= self.idf_
            norm = np.linalg.norm(rows[r])
            if norm > 0:
                rows[r] /= norm
        return rows

    def fit_transform(self, sentences):
        return self.fit(sentences).transform(sentences)

    def vectorize(self, sentence):
        return self.transform([sentence])[0]


class FrameTypeClassifier:
    """One-vs-rest linear max-margin classifier trained by SGD.

    Pegasos-style schedule: learning rate 1/(reg * t) on L2-regularized
    hinge loss; example order is reshuffled each epoch by a generator
    seeded with `seed`, so training is fully deterministic.
    """

    def __init__(self, mode="uni", lowercase=True, min_df=1,
                 epochs=50, reg=0.01, seed=0):
        self.mode = mode
        self.lowercase = lowercase
        self.min_df = min_df
        self.epochs = epochs
        self.reg = reg
        self.seed = seed
        self.featurizer_ = None
        self.classes_ = None
        self.weights_ = None
        self.biases_ = None
        self.n_predict_calls_ = 0

    def get_params(self, deep=True):
        return {"mode": self.mode, "lowercase": self.lowercase,
                "min_df": self.min_df, "epochs": self.epochs,
                "reg": self.reg, "seed": self.seed}

    def set_params(self, **params):
        for key, value in params.items():
            if key not in self.get_params():
                raise ValueError(f"unknown parameter {key!r}")
            setattr(self, key, value)
        return self

    def fit(self, sentences, labels):
        sentences = list(sentences)
        labels = list(labels)
        if not sentences:
            raise EmptyCorpus("empty training corpus")
        if len(sentences) != len(labels):
            raise ValueError("sentences and labels differ in length")
        classes = sorted(set(labels))
        if len(classes) < 2:
            raise SingleClassCorpus(f"need >= 2 labels, got {classes}")
        if self.epochs < 1 or self.reg <= 0:
            raise ValueError("epochs must be >= 1 and reg > 0")

        self.featurizer_ = TfidfFeaturizer(self.mode, self.lowercase,
                                           self.min_df)
        x = self.featurizer_.fit_transform(sentences)
        class_index = {c: k for k, c in enumerate(classes)}
        y = np.full((len(classes), len(sentences)), -1.0)
        for i, label in enumerate(labels):
            y[class_index[label], i] = 1.0

        n_classes, n_features = len(classes), x.shape[1]
        w = np.zeros((n_classes, n_features))
        b = np.zeros(n_classes)
        rng = random.Random(self.seed)
        order = list(range(len(sentences)))
        t = 0
        for _ in range(self.epochs):
            rng.shuffle(order)
            for i in order:
                t += 1
                lr = 1.0 / (self.reg * t)
                xi = x[i]
                margins = (w @ xi + b) * y[:, i]
                decay = 1.0 - lr * self.reg
                w *= decay
                b *= decay
                hinge = margins < 1.0
                if hinge.any():
                    w[hinge] += lr * np.outer(y[hinge, i], xi)
                    b[hinge] += lr * y[hinge, i]

        self.classes_ = classes
        self.weights_ = w
        self.biases_ = b
        return self

    def decision_scores(self, sentences):
        check_fitted(self, "weights_")
        x = self.featurizer_.transform(sentences)
        return x @ self.weights_.T + self.biases_

    def predict(self, sentences):
        self.n_predict_calls_ += 1
        scores = self.decision_scores(sentences)
        return [self.classes_[k] for k in scores.argmax(axis=1)]

    def predict_one(self, sentence):
        self.n_predict_calls_ += 1
        scores = self.decision_scores([sentence])[0]
        k = int(scores.argmax())
        return self.classes_[k], float(scores[k])

    # -- single-file serialization --

    def save(self, path):
        check_fitted(self, "weights_")
        payload = {
            "config": self.get_params(),
            "vocabulary": sorted(self.featurizer_.vocabulary_,
                                 key=self.featurizer_.vocabulary_.get),
            "idf": self.featurizer_.idf_.tolist(),
            "classes": self.classes_,
            "weights": self.weights_.tolist(),
            "biases": self.biases_.tolist(),
        }
        with open(path, "w", encoding="utf-8", newline="\n") as fh:
            fh.write(MODEL_MAGIC + "\n")
            fh.write(json.dumps(payload, sort_keys=True,
                                separators=(",", ":")) + "\n")

    @classmethod
    def load(cls, path):
        with open(path, encoding="utf-8") as fh:
            magic = fh.readline().rstrip("\n")
            if magic != MODEL_MAGIC:
                raise ValueError(f"not a model file (magic {magic!r})")
            payload = json.loads(fh.readline())
        clf = cls(**payload["config"])
        clf.featurizer_ = TfidfFeaturizer(clf.mode, clf.lowercase, clf.min_df)
        clf.featurizer_.vocabulary_ = {g: i for i, g
                                       in enumerate(payload["vocabulary"])}
        clf.featurizer_.idf_ = np.array(payload["idf"], dtype=float)
        clf.classes_ = payload["classes"]
        clf.weights_ = np.array(payload["weights"], dtype=float)
        clf.biases_ = np.array(payload["biases"], dtype=float)
        return clf


class FrameLexicon:
    """Verb lemma -> frame type lookup; wins over the classifier."""

    def __init__(self, entries, taxonomy=None):
        self.entries = dict(entries)
        if taxonomy is not None:
            for verb, frame_type in self.entries.items():
                if frame_type not in taxonomy:
                    raise ValueError(
                        f"lexicon maps {verb!r} to unknown frame type "
                        f"{frame_type!r}")

    def __contains__(self, lemma):
        return lemma in self.entries

    def get(self, lemma):
        return self.entries.get(lemma)

    @property
    def verbs(self):
        return set(self.entries)

    @classmethod
    def load(cls, path, taxonomy=None):
        entries = {}
        with open(path, encoding="utf-8") as fh:
            for raw in fh:
                line = raw.strip()
                if not line or line.startswith("#"):
                    continue
                cols = line.split("\t")
                if len(cols) != 2:
                    raise ValueError(f"bad lexicon line: {line!r}")
                entries[cols[0]] = cols[1]
        return cls(entries, taxonomy)


def predict_frame(clf, lexicon, sentence):
    """Assign a frame type to a parsed sentence.

    The lexicon decides for known root verbs; otherwise the classifier's
    argmax does. Returns (frame_type, score, via).
    """
    root = sentence.root()
    lemma = lemmatize(root.lemma)
    if lemma in lexicon:
        return lexicon.get(lemma), float("inf"), "Lexicon"
    if clf is None:
        raise UnsupportedSentence(
            f"verb {root.form!r} not in lexicon and no classifier loaded "
            f"(sentence: {sentence.text!r})")
    text = sentence.text or " ".join(t.form for t in sentence.tokens)
    frame_type, score = clf.predict_one(text)
    return frame_type, score, "Classifier"
