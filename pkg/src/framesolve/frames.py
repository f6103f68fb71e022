"""Frame data model, taxonomy, and slot filling from dependency parses."""

from dataclasses import dataclass, field
from enum import Enum
from fractions import Fraction

from .errors import FramesolveError, NoRoot

SUBJECT_DEPRELS = {"nsubj", "nsubj:pass"}
OBJECT_DEPRELS = {"obj", "dobj"}


class FrameKind(Enum):
    STATE = "state"
    ACTION = "action"


def parse_quantity(text):
    """Parse a numeral token into an exact rational, or None."""
    try:
        return Fraction(text)
    except (ValueError, ZeroDivisionError):
        return None


def format_quantity(q):
    """Integer-valued rationals print without a denominator."""
    if q.denominator == 1:
        return str(q.numerator)
    return f"{q.numerator}/{q.denominator}"


@dataclass(frozen=True)
class TaxonomyEntry:
    name: str
    kind: FrameKind
    opclass: str = "none"  # transfer|gain|loss|create|multiply|divide|none


class Taxonomy:
    """The fixed inventory of frame types (22 in the default set)."""

    def __init__(self, entries):
        self.entries = {e.name: e for e in entries}
        if len(self.entries) != len(entries):
            raise FramesolveError("duplicate frame type in taxonomy")

    def __contains__(self, name):
        return name in self.entries

    def __len__(self):
        return len(self.entries)

    @property
    def names(self):
        return list(self.entries)

    def kind_of(self, name):
        return self.entries[name].kind

    def opclass_of(self, name):
        return self.entries[name].opclass

    @classmethod
    def load(cls, path):
        entries = []
        with open(path, encoding="utf-8") as fh:
            for raw in fh:
                line = raw.strip()
                if not line or line.startswith("#"):
                    continue
                cols = line.split("\t")
                if len(cols) < 2:
                    raise FramesolveError(f"bad taxonomy line: {line!r}")
                kind = FrameKind(cols[1])
                opclass = cols[2] if len(cols) > 2 and cols[2] != "-" else "none"
                entries.append(TaxonomyEntry(cols[0], kind, opclass))
        return cls(entries)

    def save(self, path):
        with open(path, "w", encoding="utf-8") as fh:
            for e in self.entries.values():
                op = e.opclass if e.opclass != "none" else "-"
                fh.write(f"{e.name}\t{e.kind.value}\t{op}\n")


# plural nouns that end in s-like suffixes but must not be clipped
SINGULARIZE_EXCEPTIONS = {
    "bus", "gas", "lens", "pants", "scissors", "glasses", "series",
    "species", "news",
}


IRREGULAR_PLURALS = {
    "cookies": "cookie", "movies": "movie", "children": "child",
    "feet": "foot", "men": "man", "women": "woman", "mice": "mouse",
    "teeth": "tooth", "people": "person",
}


def normalize_entity(noun):
    """Lowercase + singularize; idempotent; hyphens preserved."""
    w = noun.lower()
    if w in IRREGULAR_PLURALS:
        return IRREGULAR_PLURALS[w]
    if w in SINGULARIZE_EXCEPTIONS:
        return w
    if w.endswith("ss"):
        return w
    if w.endswith("ies") and len(w) > 4:
        return w[:-3] + "y"
    if w.endswith("es") and len(w) > 3 and w[-3] in "sxzh":
        return w[:-2]
    if w.endswith("s") and len(w) > 2:
        return w[:-1]
    return w


@dataclass
class Frame:
    """One typed frame per sentence; only quantity mutates after creation."""

    id: int
    frame_type: str
    kind: FrameKind
    sentence_index: int = -1
    verb: str = ""
    holder: str = None
    entity: str = None
    attribute: str = None
    quantity: Fraction = None
    beneficiary: str = None
    additional_info: str = None
    text: str = ""
    is_aggregate: bool = False

    def debug_line(self):
        parts = [f"FRAME id={self.id}", f"type={self.frame_type}",
                 f"kind={self.kind.value}"]
        for name in ("holder", "entity", "attribute", "beneficiary"):
            value = getattr(self, name)
            if value is not None:
                parts.append(f"{name}={value}")
        if self.quantity is not None:
            parts.append(f"qty={format_quantity(self.quantity)}")
        if self.additional_info:
            parts.append(f"info={self.additional_info!r}")
        return " ".join(parts)


def fill_slots(parse, frame_type, taxonomy, sentence_index=-1, frame_id=-1):
    """Map dependency relations onto frame slots.

    Subject -> holder, obj/dobj -> entity, amod of the entity -> attribute,
    iobj -> beneficiary, nummod of the entity -> quantity, nmod:case
    subtrees -> additional_info. When the entity token carries no nummod,
    the first other nummod in the sentence supplies the quantity (covers
    "multiplied ... by 3" shapes).
    """
    root = parse.root()  # raises NoRoot

    holder = None
    beneficiary = None
    for child in parse.children(root.id):
        if child.deprel in SUBJECT_DEPRELS and holder is None:
            holder = child.form
        elif child.deprel == "iobj" and beneficiary is None:
            beneficiary = child.form

    entity = None
    attribute = None
    quantity = None
    entity_tok = None
    for child in parse.children(root.id):
        if child.deprel in OBJECT_DEPRELS:
            entity_tok = child
            break
    if entity_tok is not None:
        entity = normalize_entity(entity_tok.form)
        mods = []
        for child in parse.children(entity_tok.id):
            if child.deprel == "amod":
                mods.append(child.form.lower())
            elif child.deprel == "compound":
                mods.append(child.form.lower())
            elif child.deprel == "nummod" and quantity is None:
                quantity = parse_quantity(child.form)
        if mods:
            attribute = " ".join(mods)

    extra_numerals = []
    for tok in parse.tokens:
        if tok.deprel == "nummod" and (entity_tok is None or tok.head != entity_tok.id):
            value = parse_quantity(tok.form)
            if value is None:
                continue
            if quantity is None:
                quantity = value
            else:
                extra_numerals.append(format_quantity(value))

    info_parts = []
    for tok in parse.tokens:
        if tok.deprel == "nmod:case" or tok.deprel.startswith("nmod"):
            info_parts.append(" ".join(t.form for t in parse.subtree(tok)))
    info_parts.extend(extra_numerals)
    additional_info = "; ".join(info_parts) if info_parts else None

    return Frame(
        id=frame_id,
        frame_type=frame_type,
        kind=taxonomy.kind_of(frame_type),
        sentence_index=sentence_index,
        verb=root.lemma,
        holder=holder,
        entity=entity,
        attribute=attribute,
        quantity=quantity,
        beneficiary=beneficiary,
        additional_info=additional_info,
        text=parse.text,
    )
