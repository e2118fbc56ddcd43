from bt1kit.canonical import canonical_to_perm, words_to_canonical
from bt1kit.permdata import (
    PartitionedPermutation,
    is_admissible,
    is_isomorphic,
    is_self_dual_perm,
    perm_to_words,
    words_to_perm,
)
from bt1kit.words import parse_multiset


def gamma_example():
    return PartitionedPermutation.from_parts([2, 4], [0, 1, 3], {0: 2, 2: 0, 1: 3, 3: 4, 4: 1})


def test_worked_permutation_gives_fv_fvv():
    assert perm_to_words(gamma_example()) == parse_multiset("fv,fvv")


def test_single_word_perm():
    P = words_to_perm(parse_multiset("fffvvv"))
    assert len(P) == 6
    assert len(P.f_part) == 3
    assert len(P.orbits()) == 1


def test_round_trip_and_isomorphism():
    m = parse_multiset("fv^2,ffvv,fvv")
    P = words_to_perm(m)
    assert perm_to_words(P) == m
    assert is_isomorphic(P, canonical_to_perm(words_to_canonical(m)[0]))


def test_admissibility():
    assert is_admissible(words_to_perm(parse_multiset("fv,fffvvv")))
    assert not is_admissible(words_to_perm(parse_multiset("fvfv")))


def test_json_round_trip():
    P = gamma_example()
    assert PartitionedPermutation.from_json(P.to_json()) == P


def test_self_dual_perm():
    assert is_self_dual_perm(words_to_perm(parse_multiset("fv,fffvvv")))
    assert not is_self_dual_perm(words_to_perm(parse_multiset("ffv")))
