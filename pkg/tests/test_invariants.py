import pytest

from bt1kit.eo import ElementarySequence
from bt1kit.errors import BT1Error
from bt1kit.invariants import (
    InvariantBundle,
    a_number,
    hom_dim_to_M11,
    invariants,
    invariants_from_es,
    invariants_from_multiplicities,
    p_rank,
    s11,
    u11,
    word_u_number,
)
from bt1kit.words import lyndon_words, parse_multiset
from homoracle import hom_to_M11


def test_p_rank():
    assert p_rank(parse_multiset("f,v,fv")) == 1
    assert p_rank(parse_multiset("fv^3")) == 0
    assert p_rank(parse_multiset("f^2,v^2")) == 2


def test_a_number():
    assert a_number(parse_multiset("ffvv")) == 1
    assert a_number(parse_multiset("ffvfvvfv")) == 3
    assert a_number(parse_multiset("f")) == a_number(parse_multiset("v")) == 0


def test_u_of_long_word():
    assert word_u_number("vvffvvvfvffff") == 2


def test_s11_u11_table_rows():
    m = parse_multiset("fv,ffvv")
    assert (s11(m), u11(m)) == (1, 2)
    m = parse_multiset("fffv,fvvv")
    assert (s11(m), u11(m)) == (0, 0)


def test_sel_dim():
    assert invariants(parse_multiset("fv,ffvv")).sel_dim == 3


def test_non_primitive_rejected():
    with pytest.raises(BT1Error):
        invariants(parse_multiset("fvfv"))


def test_from_es():
    assert invariants_from_es(ElementarySequence((0, 1, 1, 2))) == (0, 2)
    assert invariants_from_es(ElementarySequence((1, 2))) == (2, 0)
    assert invariants_from_es(ElementarySequence((0, 0, 0))) == (0, 3)


def test_multiplicity_route_p2_d9():
    table = {"fffvvv": 1, "ffvvvf": 1, "fvvvff": 1, "vvvfff": 1, "vvfffv": 1, "vfffvv": 1,
             "fvfvfv": 1, "vfvfvf": 1}
    assert invariants_from_multiplicities(table, 6) == InvariantBundle(4, 0, 2, 1, 2)


def test_inconsistent_multiplicities():
    with pytest.raises(BT1Error):
        invariants_from_multiplicities({"ffv": 1}, 3)


def test_hom_dim_matches_union_find_oracle():
    words = [w for n in range(1, 11) for w in lyndon_words(n)]
    assert len(words) == 226
    for w in words:
        assert hom_dim_to_M11(w) == hom_to_M11(w), w


def test_hom_dim_fv():
    assert hom_dim_to_M11("fv") == 1
