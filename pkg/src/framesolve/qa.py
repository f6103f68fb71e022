"""Question classification and graph traversal for answers."""

from dataclasses import dataclass, field
from fractions import Fraction

from .depparse import ADJECTIVES, PRONOUNS, WH_WORDS
from .errors import NoAnswerFound, UnsupportedQuestionType
from .frames import (FrameKind, OBJECT_DEPRELS, SUBJECT_DEPRELS,
                     format_quantity, normalize_entity)
from .graph import OP_SYMBOLS

TEMPORAL_FINAL_CUES = {"now", "left"}
AGGREGATE_CUES = {"altogether"}


@dataclass
class Question:
    qtype: str  # Who | What | HowMany
    target_entity: str = None
    target_holder: str = None
    target_attribute: str = None
    target_beneficiary: str = None
    temporal_final: bool = False
    aggregate: bool = False
    frame_type_hint: str = None


@dataclass
class Answer:
    value: object  # Fraction or str
    equation: str = ""
    steps: list = field(default_factory=list)
    warnings: list = field(default_factory=list)

    def value_str(self):
        if isinstance(self.value, Fraction):
            return format_quantity(self.value)
        return str(self.value)


def _noun_after(tokens, cue_index):
    skip = {"do", "does", "did", "are", "is", "were", "was", "there", "?"}
    for tok in tokens[cue_index + 1:]:
        w = tok.lower()
        if w in skip or w in ADJECTIVES or not tok.isalpha():
            continue
        if tok[0].isupper():
            continue
        return tok
    return None


def classify_question(parse, frame_type_hint=None):
    """Map the question sentence onto a Question record."""
    tokens = [t.form for t in parse.tokens]
    lowered = [t.lower() for t in tokens]
    if not lowered:
        raise UnsupportedQuestionType("empty question")

    first = lowered[0]
    if first == "who":
        qtype = "Who"
    elif first == "what":
        qtype = "What"
    elif first == "how" and len(lowered) > 1 and lowered[1] in ("many", "much"):
        qtype = "HowMany"
    else:
        raise UnsupportedQuestionType(f"unsupported question word {tokens[0]!r}")

    root = None
    try:
        root = parse.root()
    except Exception:
        pass

    entity = None
    holder = None
    attribute = None
    beneficiary = None
    if root is not None:
        for child in parse.children(root.id):
            if child.deprel in OBJECT_DEPRELS and entity is None:
                entity = child.form
                mods = [c.form.lower() for c in parse.children(child.id)
                        if c.deprel in ("amod", "compound")
                        and c.form.lower() not in ("many", "much")]
                if mods:
                    attribute = " ".join(mods)
            elif child.deprel in SUBJECT_DEPRELS and holder is None:
                if child.form.lower() in WH_WORDS:
                    continue
                if child.form[0].isupper() or child.form.lower() in PRONOUNS:
                    holder = child.form
            elif child.deprel == "iobj" and beneficiary is None:
                beneficiary = child.form

    if qtype == "What":
        entity = None  # the wh-word itself occupies the object slot
    if entity is None and qtype == "HowMany":
        cue = lowered.index("many") if "many" in lowered else lowered.index("much")
        noun = _noun_after(tokens, cue)
        if noun is not None:
            entity = noun
            # adjective right before the noun acts as an attribute filter
            k = tokens.index(noun)
            if k > cue + 1 and tokens[k - 1].isalpha() \
                    and tokens[k - 1][0].islower() and lowered[k - 1] != "many":
                attribute = tokens[k - 1]
    if entity is not None:
        entity = normalize_entity(entity)

    temporal = any(w in TEMPORAL_FINAL_CUES for w in lowered) or \
        "in the end" in " ".join(lowered)
    aggregate = any(w in AGGREGATE_CUES for w in lowered) or \
        "in all" in " ".join(lowered)

    return Question(qtype=qtype, target_entity=entity, target_holder=holder,
                    target_attribute=attribute, target_beneficiary=beneficiary,
                    temporal_final=temporal, aggregate=aggregate,
                    frame_type_hint=frame_type_hint)


def _equation_from_steps(steps):
    """Render `x = q0 op1 q1 ...` from a frame's update history."""
    if not steps:
        return ""
    parts = []
    first = steps[0]
    if first.operation == "Create":
        parts.append(format_quantity(first.operand))
        rest = steps[1:]
    else:
        parts.append(format_quantity(first.before))
        rest = steps
    for step in rest:
        parts.append(OP_SYMBOLS[step.operation])
        parts.append(format_quantity(step.operand))
    return "x = " + " ".join(parts)


def _narrations(steps):
    return [s.narration for s in steps if s.narration]


def _answer_quantity(graph, frame):
    steps = graph.steps_for(frame.id)
    return Answer(value=frame.quantity,
                  equation=_equation_from_steps(steps),
                  steps=_narrations(steps),
                  warnings=list(graph.warnings))


def _aggregate_answer(graph, entity):
    agg = graph.exist_frame(entity)
    if agg is None or agg.quantity is None:
        raise NoAnswerFound(f"no frames for entity {entity!r}")
    terms = []
    base = graph._exist_base.get(entity, Fraction(0))
    if base != 0:
        terms.append(format_quantity(base))
    for f in graph.holder_states(entity):
        if f.quantity is not None:
            terms.append(format_quantity(f.quantity))
    if not terms:
        terms.append(format_quantity(agg.quantity))
    ids = {f.id for f in graph.holder_states(entity)} | {agg.id}
    steps = [s for s in graph.history if s.target_frame in ids]
    return Answer(value=agg.quantity,
                  equation="x = " + " + ".join(terms),
                  steps=_narrations(steps),
                  warnings=list(graph.warnings))


def answer_question(graph, q):
    """Traverse the finalized graph and build the Answer."""
    if q.qtype == "HowMany":
        if q.target_entity is None:
            raise NoAnswerFound("question names no countable entity")
        if q.aggregate or q.target_holder is None:
            return _aggregate_answer(graph, q.target_entity)
        matches = graph.state_frames(entity=q.target_entity,
                                     holder=q.target_holder,
                                     attribute=q.target_attribute)
        if not matches:
            raise NoAnswerFound(
                f"no state frame for ({q.target_holder}, {q.target_entity}"
                + (f", {q.target_attribute}" if q.target_attribute else "")
                + ")")
        matches = [f for f in matches if f.quantity is not None]
        if not matches:
            raise NoAnswerFound(
                f"state frame for ({q.target_holder}, {q.target_entity}) "
                f"has no quantity")
        if len(matches) == 1:
            return _answer_quantity(graph, matches[0])
        total = sum((f.quantity for f in matches), Fraction(0))
        steps = [s for s in graph.history
                 if s.target_frame in {f.id for f in matches}]
        return Answer(value=total,
                      equation="x = " + " + ".join(
                          format_quantity(f.quantity) for f in matches),
                      steps=_narrations(steps),
                      warnings=list(graph.warnings))

    candidates = [graph.nodes[i] for i in sorted(graph.nodes)]
    if q.target_entity is not None:
        candidates = [f for f in candidates if f.entity == q.target_entity]
    if q.frame_type_hint is not None:
        hinted = [f for f in candidates if f.frame_type == q.frame_type_hint]
        if hinted:
            candidates = hinted
    if q.target_beneficiary is not None:
        narrowed = [f for f in candidates
                    if f.beneficiary == q.target_beneficiary]
        if narrowed:
            candidates = narrowed

    if q.qtype == "Who":
        for f in candidates:
            if f.holder is not None:
                steps = graph.steps_for(f.id) or \
                    [s for s in graph.history if s.acting_frame == f.id]
                return Answer(value=f.holder, steps=_narrations(steps),
                              warnings=list(graph.warnings))
        raise NoAnswerFound("no frame with a holder matches the question")

    if q.qtype == "What":
        if q.target_holder is not None:
            narrowed = [f for f in candidates if f.holder == q.target_holder]
            if narrowed:
                candidates = narrowed
        for f in candidates:
            if f.entity is not None:
                steps = graph.steps_for(f.id) or \
                    [s for s in graph.history if s.acting_frame == f.id]
                return Answer(value=f.entity, steps=_narrations(steps),
                              warnings=list(graph.warnings))
        raise NoAnswerFound("no frame with an entity matches the question")

    raise UnsupportedQuestionType(q.qtype)
