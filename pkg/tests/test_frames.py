from fractions import Fraction

import pytest

from framesolve.depparse import read_conllu
from framesolve.errors import NoRoot
from framesolve.frames import (FrameKind, fill_slots, format_quantity,
                               normalize_entity, parse_quantity)

GAVE_BLOCK = """\
# text = John gave Robert 2 books.
1\tJohn\tjohn\tPROPN\t_\t_\t2\tnsubj\t_\t_
2\tgave\tgive\tVERB\t_\t_\t0\troot\t_\t_
3\tRobert\trobert\tPROPN\t_\t_\t2\tiobj\t_\t_
4\t2\t2\tNUM\t_\t_\t5\tnummod\t_\t_
5\tbooks\tbook\tNOUN\t_\t_\t2\tobj\t_\t_
6\t.\t.\tPUNCT\t_\t_\t2\tpunct\t_\t_
"""

HAD_BLOCK = """\
# text = John had 5 books.
1\tJohn\tjohn\tPROPN\t_\t_\t2\tnsubj\t_\t_
2\thad\thave\tVERB\t_\t_\t0\troot\t_\t_
3\t5\t5\tNUM\t_\t_\t4\tnummod\t_\t_
4\tbooks\tbook\tNOUN\t_\t_\t2\tobj\t_\t_
5\t.\t.\tPUNCT\t_\t_\t2\tpunct\t_\t_
"""

BALLOONS_BLOCK = """\
# text = Mary found 3 red balloons in the park.
1\tMary\tmary\tPROPN\t_\t_\t2\tnsubj\t_\t_
2\tfound\tfind\tVERB\t_\t_\t0\troot\t_\t_
3\t3\t3\tNUM\t_\t_\t5\tnummod\t_\t_
4\tred\tred\tADJ\t_\t_\t5\tamod\t_\t_
5\tballoons\tballoon\tNOUN\t_\t_\t2\tobj\t_\t_
6\tin\tin\tADP\t_\t_\t8\tcase\t_\t_
7\tthe\tthe\tDET\t_\t_\t8\tdet\t_\t_
8\tpark\tpark\tNOUN\t_\t_\t2\tnmod:case\t_\t_
9\t.\t.\tPUNCT\t_\t_\t2\tpunct\t_\t_
"""


def _parse(block):
    return read_conllu(block)[0]


def test_fill_slots_transfer(taxonomy):
    frame = fill_slots(_parse(GAVE_BLOCK), "transfer_goods", taxonomy)
    assert frame.kind is FrameKind.ACTION
    assert frame.holder == "John"
    assert frame.beneficiary == "Robert"
    assert frame.entity == "book"
    assert frame.quantity == Fraction(2)


def test_fill_slots_possess(taxonomy):
    frame = fill_slots(_parse(HAD_BLOCK), "possess", taxonomy)
    assert frame.kind is FrameKind.STATE
    assert frame.holder == "John"
    assert frame.entity == "book"
    assert frame.quantity == Fraction(5)
    assert frame.beneficiary is None
    assert frame.attribute is None


def test_fill_slots_attribute_and_info(taxonomy):
    frame = fill_slots(_parse(BALLOONS_BLOCK), "acquire", taxonomy)
    assert frame.holder == "Mary"
    assert frame.entity == "balloon"
    assert frame.attribute == "red"
    assert frame.quantity == Fraction(3)
    assert frame.additional_info == "in the park"


def test_fill_slots_never_invents_quantity(taxonomy):
    block = ("1\tJohn\tjohn\tPROPN\t_\t_\t2\tnsubj\t_\t_\n"
             "2\tlikes\tlike\tVERB\t_\t_\t0\troot\t_\t_\n"
             "3\tbooks\tbook\tNOUN\t_\t_\t2\tobj\t_\t_\n")
    frame = fill_slots(_parse(block), "possess", taxonomy)
    assert frame.quantity is None


def test_fill_slots_requires_root(taxonomy):
    from framesolve.depparse import DepSentence
    with pytest.raises(NoRoot):
        fill_slots(DepSentence(tokens=()), "possess", taxonomy)


def test_normalize_entity():
    assert normalize_entity("Books") == "book"
    assert normalize_entity("glass") == "glass"
    assert normalize_entity("glasses") == "glasses"
    assert normalize_entity("cards") == "card"
    assert normalize_entity("cookies") == "cookie"
    assert normalize_entity("boxes") == "box"
    assert normalize_entity("pennies") == "penny"
    assert normalize_entity("bus") == "bus"
    assert normalize_entity("T-shirts") == "t-shirt"


def test_normalize_entity_idempotent():
    words = ["Books", "glasses", "cards", "cookies", "boxes", "pennies",
             "children", "feet", "marbles", "class", "dress", "series"]
    for w in words:
        once = normalize_entity(w)
        assert normalize_entity(once) == once, w


def test_quantity_parse_and_format():
    assert parse_quantity("5") == Fraction(5)
    assert parse_quantity("3/4") == Fraction(3, 4)
    assert parse_quantity("books") is None
    assert format_quantity(Fraction(12)) == "12"
    assert format_quantity(Fraction(15, 4)) == "15/4"
    assert format_quantity(Fraction(-3, 1)) == "-3"


def test_frame_debug_line(taxonomy):
    frame = fill_slots(_parse(HAD_BLOCK), "possess", taxonomy, frame_id=1)
    line = frame.debug_line()
    assert line.startswith("FRAME id=1 type=possess kind=state")
    assert "holder=John" in line and "entity=book" in line and "qty=5" in line
