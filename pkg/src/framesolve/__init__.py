"""Frame-based arithmetic word problem solver."""

from .classify import FrameLexicon, FrameTypeClassifier, TfidfFeaturizer
from .depparse import DepSentence, DepToken, fallback_extract, read_conllu
from .frames import Frame, Taxonomy, fill_slots, normalize_entity
from .graph import FrameGraph
from .pipeline import Solver, load_default_lexicon, load_default_taxonomy
from .qa import Answer, Question, answer_question, classify_question
from .textnorm import normalize_numbers, split_sentences, tokenize

__version__ = "0.1.0"

__all__ = [
    "Answer", "DepSentence", "DepToken", "Frame", "FrameGraph",
    "FrameLexicon", "FrameTypeClassifier", "Question", "Solver",
    "Taxonomy", "TfidfFeaturizer", "answer_question", "classify_question",
    "fallback_extract", "fill_slots", "load_default_lexicon",
    "load_default_taxonomy", "normalize_entity", "normalize_numbers",
    "read_conllu", "split_sentences", "tokenize",
]
