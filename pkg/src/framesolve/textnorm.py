"""Text normalization: number words to digits, sentence split, tokenization."""

import re
from dataclasses import dataclass, field

from .errors import EmptyInput

UNITS = {
    "zero": 0, "one": 1, "two": 2, "three": 3, "four": 4,
    "five": 5, "six": 6, "seven": 7, "eight": 8, "nine": 9,
}
TEENS = {
    "ten": 10, "eleven": 11, "twelve": 12, "thirteen": 13, "fourteen": 14,
    "fifteen": 15, "sixteen": 16, "seventeen": 17, "eighteen": 18,
    "nineteen": 19,
}
TENS = {
    "twenty": 20, "thirty": 30, "forty": 40, "fifty": 50,
    "sixty": 60, "seventy": 70, "eighty": 80, "ninety": 90,
}
NUMBER_WORDS = set(UNITS) | set(TEENS) | set(TENS) | {"hundred", "thousand", "and"}

MAX_VALUE = 999_999

ABBREVIATIONS = {"mr.", "mrs.", "dr.", "ms.", "prof.", "st.", "jr.", "sr.", "no."}

_WORD_RE = re.compile(r"[A-Za-z]+(?:-[A-Za-z]+)*")
_COMMA_GROUP_RE = re.compile(r"(\d),(\d{3})(?!\d)")


@dataclass(frozen=True)
class RawProblem:
    body_text: str
    question_text: str
    id: str = ""

    def __post_init__(self):
        if not self.body_text.strip() or not self.question_text.strip():
            raise EmptyInput("problem body and question must be non-empty")
        q = self.question_text.strip()
        if not q.endswith("?"):
            q += "?"
        object.__setattr__(self, "body_text", self.body_text.strip())
        object.__setattr__(self, "question_text", q)


@dataclass(frozen=True)
class NormSentence:
    index: int
    tokens: tuple
    is_question: bool = False

    @property
    def text(self):
        return " ".join(self.tokens)


def _parse_number_words(words, bounds):
    """Longest valid parse of a lowercase word list starting a number.

    bounds[k] is the text-token index word k came from; a parse may only
    stop on a token boundary (so hyphen compounds are all-or-nothing).
    Returns (value, n_words_consumed) or None. "and" is only allowed
    after a scale word and must be followed by more number words.
    """
    total = 0        # completed thousands
    current = 0      # value accumulated below the next scale
    group = 0        # sub-hundred group, to enforce tens->unit ordering
    group_state = "start"  # start | tens | done
    seen_scale = False
    best = None
    i = 0
    while i < len(words):
        w = words[i]
        if w in UNITS:
            if group_state == "done" or (w == "zero" and group_state != "start"):
                break
            group += UNITS[w]
            group_state = "done"
        elif w in TEENS:
            if group_state != "start":
                break
            group += TEENS[w]
            group_state = "done"
        elif w in TENS:
            if group_state != "start":
                break
            group += TENS[w]
            group_state = "tens"
        elif w == "hundred":
            if group == 0:
                break
            current = (current + group) * 100
            if total + current > MAX_VALUE:
                break
            group = 0
            group_state = "start"
            seen_scale = True
        elif w == "thousand":
            if current + group == 0:
                break
            if total + (current + group) * 1000 > MAX_VALUE:
                break
            total += (current + group) * 1000
            current = 0
            group = 0
            group_state = "start"
            seen_scale = True
        elif w == "and":
            # only between a scale word and a continuing sub-hundred group;
            # never ends a number span
            followers = (set(UNITS) - {"zero"}) | set(TEENS) | set(TENS)
            if not seen_scale or group_state != "start":
                break
            if i + 1 >= len(words) or words[i + 1] not in followers:
                break
            i += 1
            continue
        else:
            break
        i += 1
        value = total + current + group
        at_boundary = i == len(words) or bounds[i] != bounds[i - 1]
        if value <= MAX_VALUE and at_boundary:
            best = (value, i)
    return best


def normalize_numbers(text, article_as_one=False):
    """Replace English number-word spans with digit strings.

    Digit-comma groups also lose their commas. Unrecognized words pass
    through unchanged; everything outside replaced spans stays identical.
    With article_as_one=True, standalone "a"/"an" become "1".
    """
    prev = None
    while prev != text:
        prev = text
        text = _COMMA_GROUP_RE.sub(r"\1\2", text)

    out = []
    pos = 0
    matches = list(_WORD_RE.finditer(text))
    i = 0
    while i < len(matches):
        m = matches[i]
        first = m.group(0).lower()
        first_parts = first.split("-")
        if not all(p in NUMBER_WORDS for p in first_parts) or first == "and":
            if article_as_one and first in ("a", "an"):
                out.append(text[pos:m.start()])
                out.append("1")
                pos = m.end()
            i += 1
            continue
        # collect the candidate run of number-word tokens
        run = [m]
        j = i + 1
        while j < len(matches):
            nxt = matches[j]
            gap = text[run[-1].end():nxt.start()]
            if gap.strip() != "":
                break
            parts = nxt.group(0).lower().split("-")
            if not all(p in NUMBER_WORDS for p in parts):
                break
            run.append(nxt)
            j += 1
        words = []
        bounds = []  # word index -> token index in run
        for ti, tok in enumerate(run):
            for p in tok.group(0).lower().split("-"):
                words.append(p)
                bounds.append(ti)
        parsed = _parse_number_words(words, bounds)
        if parsed is None:
            i += 1
            continue
        value, consumed = parsed
        last_tok = bounds[consumed - 1]
        out.append(text[pos:m.start()])
        out.append(str(value))
        pos = run[last_tok].end()
        i += last_tok + 1
    out.append(text[pos:])
    return "".join(out)


_SENT_SPLIT_RE = re.compile(r"(?<=[.?!])\s+")


def split_sentences(text):
    """Split on ./?/! followed by whitespace; terminators retained."""
    pieces = []
    start = 0
    for m in _SENT_SPLIT_RE.finditer(text):
        candidate = text[start:m.start()].strip()
        if not candidate:
            start = m.end()
            continue
        last_word = candidate.split()[-1].lower()
        if last_word in ABBREVIATIONS:
            continue
        pieces.append(candidate)
        start = m.end()
    tail = text[start:].strip()
    if tail:
        pieces.append(tail)
    if not pieces:
        raise EmptyInput("no sentences in input")
    return pieces


_DETACHABLE = ".?!,;"


def tokenize(sentence, index=0, is_question=None):
    """Whitespace split with terminal punctuation and commas detached."""
    tokens = []
    for chunk in sentence.split():
        if chunk.lower() in ABBREVIATIONS:
            tokens.append(chunk)
            continue
        trailing = []
        while chunk and chunk[-1] in _DETACHABLE and len(chunk) > 1:
            if chunk.lower() in ABBREVIATIONS:
                break
            trailing.append(chunk[-1])
            chunk = chunk[:-1]
        if chunk:
            tokens.append(chunk)
        tokens.extend(reversed(trailing))
    if is_question is None:
        is_question = sentence.rstrip().endswith("?")
    return NormSentence(index=index, tokens=tuple(tokens), is_question=is_question)
