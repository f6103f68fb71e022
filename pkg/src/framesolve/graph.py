"""Frame graph: world state, action application, quantity propagation."""

from dataclasses import dataclass
from fractions import Fraction

from .errors import DivisionByZero, NoMatchingStateFrame, NoQuantity
from .frames import Frame, FrameKind, format_quantity

OP_SYMBOLS = {"Add": "+", "Sub": "-", "Mul": "*", "Div": "/"}


@dataclass(frozen=True)
class UpdateStep:
    acting_frame: int
    target_frame: int
    operation: str  # Add | Sub | Mul | Div | Create
    operand: Fraction
    before: Fraction
    after: Fraction
    narration: str


def apply_op(operation, before, operand):
    if operation == "Create":
        return operand
    if operation == "Add":
        return before + operand
    if operation == "Sub":
        return before - operand
    if operation == "Mul":
        return before * operand
    if operation == "Div":
        if operand == 0:
            raise DivisionByZero("division by zero quantity")
        return before / operand
    raise ValueError(f"unknown operation {operation!r}")


def _strip_terminator(text):
    return text.rstrip().rstrip(".?!").rstrip()


class FrameGraph:
    """Mutable world model: state/action frames plus compatibility edges.

    Each entity with holder-state frames gets one aggregate "exist" frame
    whose quantity is the sum of those holders' quantities (plus any
    explicitly created existing stock, tracked as a base amount).
    """

    def __init__(self, taxonomy):
        self.taxonomy = taxonomy
        self.nodes = {}
        self.edges = set()  # (low_id, high_id, label)
        self.history = []
        self.warnings = []
        self._next_id = 1
        self._exist_id = {}    # entity -> exist frame id
        self._exist_base = {}  # entity -> Fraction base not owned by holders

    def _new_id(self):
        i = self._next_id
        self._next_id += 1
        return i

    def _add_edge(self, a, b, label):
        if a != b:
            self.edges.add((min(a, b), max(a, b), label))

    def state_frames(self, entity=None, holder=None, attribute=None):
        out = []
        for f in sorted(self.nodes.values(), key=lambda f: f.id):
            if f.kind is not FrameKind.STATE or f.is_aggregate:
                continue
            if entity is not None and f.entity != entity:
                continue
            if holder is not None and f.holder != holder:
                continue
            if attribute is not None and f.attribute != attribute:
                continue
            out.append(f)
        return out

    def holder_states(self, entity):
        return [f for f in self.state_frames(entity=entity) if f.holder is not None]

    def exist_frame(self, entity):
        fid = self._exist_id.get(entity)
        return self.nodes.get(fid) if fid is not None else None

    def _record(self, acting, target, operation, operand, narration):
        before = target.quantity if target.quantity is not None else Fraction(0)
        after = apply_op(operation, before, operand)
        target.quantity = after
        step = UpdateStep(acting_frame=acting.id if acting else target.id,
                          target_frame=target.id, operation=operation,
                          operand=operand, before=before, after=after,
                          narration=narration)
        self.history.append(step)
        if after < 0:
            self.warnings.append(
                f"NegativeQuantity: {target.holder or 'world'} has "
                f"{format_quantity(after)} {target.entity}")
        return step

    def _ensure_exist(self, entity, explicit=None):
        existing = self.exist_frame(entity)
        if existing is not None:
            return existing
        if explicit is not None:
            frame = explicit
        else:
            frame = Frame(id=self._new_id(), frame_type="exist",
                          kind=FrameKind.STATE, entity=entity,
                          quantity=Fraction(0), is_aggregate=True)
            self.nodes[frame.id] = frame
        self._exist_id[entity] = frame.id
        self._exist_base.setdefault(entity, Fraction(0))
        for other in self.state_frames(entity=entity):
            if other.id != frame.id:
                self._add_edge(frame.id, other.id, "aggregate_of")
        return frame

    def _ensure_holder_state(self, holder, entity, attribute=None,
                             state_type="possess", acting=None, narration=None):
        matches = self.state_frames(entity=entity, holder=holder,
                                    attribute=attribute)
        if matches:
            return matches[0]
        frame = Frame(id=self._new_id(), frame_type=state_type,
                      kind=FrameKind.STATE, holder=holder, entity=entity,
                      attribute=attribute, quantity=None)
        self.nodes[frame.id] = frame
        self._link_same_entity(frame)
        if narration is None:
            narration = f"{holder} starts with 0 {entity}"
        self._record(acting, frame, "Create", Fraction(0), narration)
        agg = self._ensure_exist(entity)
        self._add_edge(agg.id, frame.id, "aggregate_of")
        return frame

    def _link_same_entity(self, frame):
        if frame.kind is not FrameKind.STATE or frame.entity is None:
            return
        for other in self.nodes.values():
            if other.id == frame.id or other.entity != frame.entity:
                continue
            if other.kind is not FrameKind.STATE:
                continue
            label = "aggregate_of" if other.is_aggregate or frame.is_aggregate \
                else "same_entity"
            self._add_edge(frame.id, other.id, label)

    def add_frame(self, frame):
        """Insert a frame; actions apply their effects immediately."""
        if frame.id is None or frame.id < 0:
            frame.id = self._new_id()
        else:
            self._next_id = max(self._next_id, frame.id + 1)
        self.nodes[frame.id] = frame
        self._link_same_entity(frame)
        if frame.kind is FrameKind.STATE:
            if frame.frame_type == "exist":
                # explicit existing stock becomes the entity's exist frame,
                # or tops up the base of an already-present one
                qty = frame.quantity or Fraction(0)
                if frame.entity is not None and frame.entity not in self._exist_id:
                    self._exist_id[frame.entity] = frame.id
                    self._exist_base[frame.entity] = qty
                    frame.quantity = None
                    self._record(None, frame, "Create", qty, frame.text or "")
                elif frame.entity is not None:
                    agg = self.nodes[self._exist_id[frame.entity]]
                    self._exist_base[frame.entity] += qty
                    self._record(None, agg, "Add", qty, frame.text or "")
            elif frame.holder is not None:
                if frame.quantity is not None:
                    qty = frame.quantity
                    frame.quantity = None
                    self._record(None, frame, "Create", qty, frame.text or "")
                if frame.entity is not None:
                    self._ensure_exist(frame.entity)
        else:
            self.apply_action(frame)
        self.propagate()
        return self

    def apply_action(self, action):
        """Dispatch an action frame onto matching state frames."""
        opclass = self.taxonomy.opclass_of(action.frame_type)
        if opclass == "none":
            return []
        if action.quantity is None:
            raise NoQuantity(f"action {action.frame_type!r} has no quantity "
                             f"(sentence: {action.text!r})")
        q = action.quantity
        entity = action.entity
        attribute = action.attribute
        narration = f"{_strip_terminator(action.text)}" if action.text else \
            f"{action.frame_type}({format_quantity(q)})"
        steps_before = len(self.history)

        def narrate(before, opsym, after):
            return (f"{narration}: {format_quantity(before)} {opsym} "
                    f"{format_quantity(q)} = {format_quantity(after)}")

        if opclass == "transfer":
            source = self._find_or_spawn(action.holder, entity, attribute, action)
            self._arith(action, source, "Sub")
            if action.beneficiary is not None:
                target = self._ensure_holder_state(
                    action.beneficiary, entity, attribute, acting=action)
                self._arith(action, target, "Add")
        elif opclass == "gain":
            target = self._ensure_holder_state(action.holder, entity,
                                               attribute, acting=action)
            self._arith(action, target, "Add")
        elif opclass == "loss":
            target = self._find_or_spawn(action.holder, entity, attribute, action)
            self._arith(action, target, "Sub")
        elif opclass == "create":
            agg = self._ensure_exist(entity)
            self._exist_base[entity] = self._exist_base.get(entity, Fraction(0)) + q
            before = agg.quantity if agg.quantity is not None else Fraction(0)
            self._record(action, agg, "Add", q, narrate(before, "+", before + q))
        elif opclass == "multiply":
            target = self._require_state(action.holder, entity, attribute, action)
            self._arith(action, target, "Mul")
        elif opclass == "divide":
            if q == 0:
                raise DivisionByZero(f"divide by zero in: {action.text!r}")
            target = self._require_state(action.holder, entity, attribute, action)
            self._arith(action, target, "Div")
        else:
            raise NoMatchingStateFrame(f"unknown operation class {opclass!r}")
        for f in self.state_frames(entity=entity):
            self._add_edge(action.id, f.id, "acts_on")
        self.propagate()
        return self.history[steps_before:]

    def _arith(self, action, target, operation):
        q = action.quantity
        before = target.quantity if target.quantity is not None else Fraction(0)
        after = apply_op(operation, before, q)
        text = _strip_terminator(action.text) if action.text else action.frame_type
        narration = (f"{text}: {format_quantity(before)} "
                     f"{OP_SYMBOLS[operation]} {format_quantity(q)} "
                     f"= {format_quantity(after)}")
        return self._record(action, target, operation, q, narration)

    def _find_or_spawn(self, holder, entity, attribute, action):
        matches = self.state_frames(entity=entity, holder=holder,
                                    attribute=attribute)
        if not matches and attribute is not None:
            matches = self.state_frames(entity=entity, holder=holder)
        if matches:
            return matches[0]
        self.warnings.append(
            f"NegativeQuantity: no prior state for ({holder}, {entity}); "
            f"starting from 0")
        return self._ensure_holder_state(holder, entity, attribute, acting=action)

    def _require_state(self, holder, entity, attribute, action):
        matches = self.state_frames(entity=entity, holder=holder,
                                    attribute=attribute)
        if not matches and attribute is not None:
            matches = self.state_frames(entity=entity, holder=holder)
        if not matches:
            raise NoMatchingStateFrame(
                f"no state frame for ({holder}, {entity}) "
                f"(sentence: {action.text!r})")
        return matches[0]

    def propagate(self):
        """Recompute every aggregate exist quantity as base + holder sum."""
        for entity, fid in self._exist_id.items():
            agg = self.nodes[fid]
            total = self._exist_base.get(entity, Fraction(0))
            for f in self.holder_states(entity):
                if f.quantity is not None:
                    total += f.quantity
            agg.quantity = total
        return self

    def steps_for(self, frame_id):
        return [s for s in self.history if s.target_frame == frame_id]

    def validate_aggregates(self):
        for entity, fid in self._exist_id.items():
            agg = self.nodes[fid]
            total = self._exist_base.get(entity, Fraction(0))
            for f in self.holder_states(entity):
                if f.quantity is not None:
                    total += f.quantity
            if agg.quantity != total:
                raise AssertionError(
                    f"aggregate mismatch for {entity}: "
                    f"{agg.quantity} != {total}")
        return True

    def dump(self):
        """Deterministic line-oriented text rendering."""
        lines = [self.nodes[i].debug_line() for i in sorted(self.nodes)]
        edge_lines = sorted(f"EDGE {a} {b} {label}" for a, b, label in self.edges)
        return "\n".join(lines + edge_lines)
