"""End-to-end solving: normalize, parse, identify frames, build, answer."""

import os
from dataclasses import replace
from importlib import resources

from . import textnorm
from .classify import FrameLexicon, predict_frame
from .depparse import DepSentence, DepToken, ParseSource, fallback_extract
from .errors import EmptyInput, FramesolveError, PipelineError
from .frames import Taxonomy, fill_slots
from .graph import FrameGraph
from .qa import answer_question, classify_question

DATA_ENV_VAR = "FRAMESOLVE_DATA"


def default_data_path(filename):
    override = os.environ.get(DATA_ENV_VAR)
    if override:
        return os.path.join(override, filename)
    return str(resources.files("framesolve.data") / filename)


def load_default_taxonomy():
    return Taxonomy.load(default_data_path("taxonomy.tsv"))


def load_default_lexicon(taxonomy=None):
    return FrameLexicon.load(default_data_path("lexicon.tsv"), taxonomy)


def split_problem_text(text):
    """Normalize and split raw text; the last '?' sentence is the question."""
    normalized = textnorm.normalize_numbers(text)
    sentences = textnorm.split_sentences(normalized)
    question_idx = None
    for i, sent in enumerate(sentences):
        if sent.rstrip().endswith("?"):
            question_idx = i
    if question_idx is None:
        raise EmptyInput("input has no question sentence (ending in '?')")
    tokenized = [textnorm.tokenize(s, index=i, is_question=(i == question_idx))
                 for i, s in enumerate(sentences)]
    return tokenized, question_idx, sentences


def _trivial_parse(sentence):
    """Degenerate flat parse for question sentences with no lexicon verb."""
    toks = list(sentence.tokens)
    root_i = len(toks) - 1
    for i in range(len(toks) - 1, -1, -1):
        if toks[i].isalpha():
            root_i = i
            break
    dep_tokens = []
    for i, t in enumerate(toks):
        head = 0 if i == root_i else root_i + 1
        rel = "root" if i == root_i else "dep"
        dep_tokens.append(DepToken(id=i + 1, form=t, lemma=t.lower(),
                                   upos="_", head=head, deprel=rel))
    return DepSentence(tokens=tuple(dep_tokens), text=sentence.text,
                       source=ParseSource.FALLBACK_RULES)


class Solver:
    """Configured pipeline; one solve() call builds one fresh graph."""

    def __init__(self, lexicon, taxonomy, classifier=None):
        self.lexicon = lexicon
        self.taxonomy = taxonomy
        self.classifier = classifier

    def solve(self, text, parses=None):
        """Solve a word problem given as raw text.

        parses, when given, is a list of DepSentence aligned positionally
        with the split sentences (question included); a count mismatch is
        an error. Returns (Answer, graph).
        """
        sentences, question_idx, raw_sentences = split_problem_text(text)
        if parses is not None and len(parses) != len(sentences):
            raise FramesolveError(
                f"parse count mismatch: {len(parses)} CoNLL-U sentences for "
                f"{len(sentences)} split sentences")

        graph = FrameGraph(self.taxonomy)
        question_parse = None
        question_hint = None
        for sent in sentences:
            if parses is not None:
                parse = parses[sent.index]
                if not parse.text:
                    parse = replace(parse, text=raw_sentences[sent.index])
            else:
                try:
                    parse = fallback_extract(sent, self.lexicon.verbs)
                except PipelineError:
                    if sent.index != question_idx:
                        raise
                    parse = _trivial_parse(sent)
                parse = replace(parse, text=raw_sentences[sent.index])
            if sent.index == question_idx:
                question_parse = parse
                try:
                    question_hint, _, _ = predict_frame(
                        self.classifier, self.lexicon, parse)
                except FramesolveError:
                    question_hint = None
                continue
            try:
                frame_type, _, _ = predict_frame(self.classifier,
                                                 self.lexicon, parse)
                frame = fill_slots(parse, frame_type, self.taxonomy,
                                   sentence_index=sent.index)
                graph.add_frame(frame)
            except FramesolveError as exc:
                raise type(exc)(f"sentence {sent.index}: {exc}") from exc

        try:
            question = classify_question(question_parse,
                                          frame_type_hint=question_hint)
            answer = answer_question(graph, question)
        except FramesolveError as exc:
            raise type(exc)(f"sentence {question_idx}: {exc}") from exc
        return answer, graph

    def solve_problem(self, problem, parses=None):
        text = problem.body.rstrip()
        if not text.endswith((".", "!", "?")):
            text += "."
        answer, _ = self.solve(text + " " + problem.question, parses=parses)
        return answer
