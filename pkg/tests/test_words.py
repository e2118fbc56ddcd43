import pytest

from bt1kit.errors import BT1Error
from bt1kit.words import (
    CyclicWord,
    WordMultiset,
    break_count_k,
    breaks,
    complement,
    exp_notation,
    is_primitive,
    least_rotation,
    lyndon_words,
    parse_multiset,
    primitive_multisets,
    primitive_root,
    rotate,
    rotations,
)


def test_rotate_moves_last_letter_to_front():
    assert rotate("fffvvv", 1) == "vfffvv"
    assert rotate("fv", 2) == "fv"


def test_primitivity():
    assert not is_primitive("fvfv")
    assert is_primitive("fffvvv")
    assert primitive_root("fvfvfv") == ("fv", 3)


def test_break_count_table():
    assert [break_count_k(i) for i in range(16)] == [0, 1, 2, 1, 2, 3, 2, 1, 2, 3, 4, 3, 2, 3, 2, 1]


def test_breaks_wrap_around():
    assert breaks("fv") == {0, 1}


@pytest.mark.parametrize(
    "w, pairs",
    [("ffvv", [(2, 2)]), ("vvffvvvfvffff", [(4, 1), (1, 3), (2, 2)])],
)
def test_exp_notation(w, pairs):
    assert exp_notation(w) == pairs


def test_cyclic_word_identifies_rotations():
    assert CyclicWord.of("vfff") == CyclicWord.of("ffvf")
    assert str(CyclicWord.of("vf")) == "fv"
    assert least_rotation("vvfvf") in rotations("vvfvf")
    assert CyclicWord.of("ffv").complement() == CyclicWord.of("fvv")


def test_complement():
    assert complement("ffv") == "vvf"


def test_parse_and_format_round_trip():
    m = parse_multiset("fv^2, ffvv")
    assert m[CyclicWord("fv")] == 2
    assert m.dimension == 8
    assert parse_multiset(str(m)) == m


def test_multiset_accumulates_duplicate_rotations():
    m = WordMultiset({"fv": 1, "vf": 2})
    assert m[CyclicWord("fv")] == 3


@pytest.mark.parametrize("bad", ["", "fx", "fv^0", "fv^a"])
def test_parse_rejects_garbage(bad):
    with pytest.raises(BT1Error):
        parse_multiset(bad)


def test_self_duality_of_words():
    assert parse_multiset("fv,fffvvv").is_self_dual()
    assert parse_multiset("ffvv").is_self_dual()
    assert not parse_multiset("ffv").is_self_dual()


def test_retract_replaces_powers_by_roots():
    m = WordMultiset({"fvfv": 1, "fv": 1, "ff": 1})
    assert m.retract() == parse_multiset("fv^3,f^2")


def test_lyndon_counts_match_necklace_formula():
    # binary Lyndon words: 2, 1, 2, 3, 6, 9, 18, 30
    assert [len(list(lyndon_words(n))) for n in range(1, 9)] == [2, 1, 2, 3, 6, 9, 18, 30]


def test_primitive_multiset_enumeration_has_no_duplicates():
    ms = list(primitive_multisets(6))
    assert len(ms) == len(set(ms))
    assert all(m.primitive and 1 <= m.dimension <= 6 for m in ms)
