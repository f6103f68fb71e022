"""CoNLL-U ingestion and a rule-based fallback dependency extractor."""

import io
from dataclasses import dataclass
from enum import Enum

from .errors import MalformedConllu, MultipleRoots, NoRoot, NoVerbFound
from .lemma import lemmatize


class ParseSource(Enum):
    EXTERNAL_PARSE = "external"
    FALLBACK_RULES = "fallback"


@dataclass(frozen=True)
class DepToken:
    id: int
    form: str
    lemma: str
    upos: str
    head: int
    deprel: str


@dataclass(frozen=True)
class DepSentence:
    tokens: tuple
    text: str = ""
    source: ParseSource = ParseSource.EXTERNAL_PARSE

    def root(self):
        for tok in self.tokens:
            if tok.head == 0:
                return tok
        raise NoRoot(f"no root token in: {self.text!r}")

    def children(self, head_id, deprels=None):
        out = [t for t in self.tokens if t.head == head_id]
        if deprels is not None:
            out = [t for t in out if t.deprel in deprels]
        return out

    def subtree(self, tok):
        """All descendants of tok including itself, in surface order."""
        keep = {tok.id}
        changed = True
        while changed:
            changed = False
            for t in self.tokens:
                if t.head in keep and t.id not in keep:
                    keep.add(t.id)
                    changed = True
        return [t for t in self.tokens if t.id in keep]


def validate(sent):
    roots = [t for t in sent.tokens if t.head == 0]
    if not roots:
        raise NoRoot(f"sentence has no root: {sent.text!r}")
    if len(roots) > 1:
        raise MultipleRoots(f"sentence has {len(roots)} roots: {sent.text!r}")
    n = len(sent.tokens)
    by_id = {t.id: t for t in sent.tokens}
    for tok in sent.tokens:
        if tok.head != 0 and not 1 <= tok.head <= n:
            raise MalformedConllu(0, f"head {tok.head} out of range for token {tok.id}")
        seen = set()
        cur = tok
        while cur.head != 0:
            if cur.id in seen:
                raise MalformedConllu(0, f"cycle through token {tok.id}")
            seen.add(cur.id)
            cur = by_id[cur.head]
    return sent


def read_conllu(stream):
    """Parse a CoNLL-U stream into DepSentences.

    Accepts a text or byte stream, or a string. Multiword-token ranges
    ("1-2") and empty nodes ("1.1") are skipped.
    """
    if isinstance(stream, bytes):
        stream = stream.decode("utf-8")
    if isinstance(stream, str):
        stream = io.StringIO(stream)

    sentences = []
    tokens = []
    text = ""

    def flush():
        nonlocal tokens, text
        if tokens:
            sent = DepSentence(tokens=tuple(tokens), text=text,
                               source=ParseSource.EXTERNAL_PARSE)
            validate(sent)
            sentences.append(sent)
        tokens = []
        text = ""

    for line_no, raw in enumerate(stream, start=1):
        if isinstance(raw, bytes):
            raw = raw.decode("utf-8")
        line = raw.rstrip("\n")
        if not line.strip():
            flush()
            continue
        if line.startswith("#"):
            comment = line.lstrip("#").strip()
            if comment.startswith("text"):
                _, _, value = comment.partition("=")
                text = value.strip()
            continue
        cols = line.split("\t")
        if len(cols) != 10:
            raise MalformedConllu(line_no, f"expected 10 columns, got {len(cols)}")
        tid = cols[0]
        if "-" in tid or "." in tid:
            continue
        try:
            tok_id = int(tid)
            head = int(cols[6])
        except ValueError:
            raise MalformedConllu(line_no, f"non-integer id/head: {tid!r}/{cols[6]!r}")
        lemma = cols[2] if cols[2] != "_" else cols[1].lower()
        tokens.append(DepToken(id=tok_id, form=cols[1], lemma=lemma,
                               upos=cols[3], head=head, deprel=cols[7]))
    flush()
    return sentences


# closed sets for the fallback extractor
PRONOUNS = {"he", "she", "they", "i", "we", "you", "it", "him", "her", "them"}
WH_WORDS = {"who", "what", "how", "when", "where", "why", "which", "whom"}
STOPWORDS = {
    "the", "a", "an", "of", "to", "and", "or", "his", "her", "their", "its",
    "my", "your", "our", "some", "each", "every", "more", "many", "much",
    "did", "does", "do", "now", "then", "there", "are", "is", "was", "were",
    "equally", "among", "between", "by", "away", "that", "this", "these",
}
ADJECTIVES = {
    "red", "blue", "green", "yellow", "black", "white", "brown", "pink",
    "purple", "orange", "gray", "small", "big", "large", "little", "old",
    "new", "tall", "short", "shiny", "broken",
}
PREPOSITIONS = {"in", "on", "at"}


def _is_number(tok):
    t = tok.lstrip("-")
    return t.replace(".", "", 1).isdigit() and t != ""


def fallback_extract(sentence, verbs):
    """Build a flat pseudo-parse from a tokenized sentence.

    verbs is the set of verb lemmas recognized as frame triggers (the
    lexicon's verbs). Emits only deprels from {nsubj, obj, iobj, nummod,
    amod, nmod:case, root, dep}.
    """
    toks = list(sentence.tokens)
    lemmas = [lemmatize(t) for t in toks]
    deprel = ["dep"] * len(toks)
    head = [None] * len(toks)

    verb_i = None
    for i, lem in enumerate(lemmas):
        if lem in verbs and (i > 0 or toks[i][0].islower()):
            verb_i = i
            break
    if verb_i is None and lemmas and lemmas[0] in verbs:
        verb_i = 0
    if verb_i is None:
        raise NoVerbFound(f"no frame verb in: {sentence.text!r}")

    deprel[verb_i] = "root"

    def attach(i, h, rel):
        head[i] = h
        deprel[i] = rel

    # subject: first capitalized-or-pronoun token before the verb
    for i in range(verb_i):
        t = toks[i]
        if t.lower() in WH_WORDS:
            continue
        if (t[0].isupper() and t.isalpha()) or t.lower() in PRONOUNS:
            attach(i, verb_i, "nsubj")
            break

    # numbers: attach to the nearest following noun-like token
    obj_i = None
    num_i = None
    for i, t in enumerate(toks):
        if not _is_number(t):
            continue
        noun_i = None
        for j in range(i + 1, len(toks)):
            w = toks[j].lower()
            if (toks[j].isalpha() and w not in STOPWORDS
                    and w not in ADJECTIVES and lemmas[j] not in verbs
                    and not toks[j][0].isupper()):
                noun_i = j
                break
        if noun_i is None:
            continue
        attach(i, noun_i, "nummod")
        if obj_i is None and noun_i > verb_i:
            obj_i = noun_i
            num_i = i
            attach(noun_i, verb_i, "obj")

    # object without a numeral: first noun-like token after the verb
    if obj_i is None:
        for j in range(verb_i + 1, len(toks)):
            w = toks[j].lower()
            if (toks[j].isalpha() and w not in STOPWORDS
                    and w not in ADJECTIVES and w not in PREPOSITIONS
                    and lemmas[j] not in verbs and not toks[j][0].isupper()):
                obj_i = j
                attach(j, verb_i, "obj")
                break

    # beneficiary: person-name token between verb and the object noun
    if obj_i is not None:
        upto = num_i if num_i is not None else obj_i
        for i in range(verb_i + 1, upto):
            if toks[i][0].isupper() and toks[i].isalpha() and deprel[i] == "dep":
                attach(i, verb_i, "iobj")
                break
        # adjective immediately preceding the object noun
        if obj_i > 0 and toks[obj_i - 1].lower() in ADJECTIVES:
            attach(obj_i - 1, obj_i, "amod")

    # trailing "in/on/at X" span
    for i in range(len(toks) - 1, max(verb_i, obj_i or 0), -1):
        if toks[i].lower() in PREPOSITIONS and deprel[i] == "dep":
            span = [j for j in range(i + 1, len(toks))
                    if toks[j].isalpha() and deprel[j] == "dep"]
            if span:
                nmod_i = span[-1]
                attach(nmod_i, verb_i, "nmod:case")
                attach(i, nmod_i, "dep")
                for j in span[:-1]:
                    attach(j, nmod_i, "dep")
            break

    # remaining tokens hang off the root
    dep_tokens = []
    for i, t in enumerate(toks):
        if i == verb_i:
            h = 0
        elif head[i] is None:
            h = verb_i + 1
        else:
            h = head[i] + 1
        dep_tokens.append(DepToken(id=i + 1, form=t, lemma=lemmas[i],
                                   upos="_", head=h, deprel=deprel[i]))
    sent = DepSentence(tokens=tuple(dep_tokens), text=sentence.text,
                       source=ParseSource.FALLBACK_RULES)
    return validate(sent)
