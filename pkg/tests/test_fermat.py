import pytest

from bt1kit import fermat as fm
from bt1kit.errors import BT1Error
from bt1kit.invariants import InvariantBundle, invariants
from bt1kit.words import parse_multiset


def test_spec_p2_d9():
    spec = fm.build_spec(2, 9)
    assert (spec.ell, spec.genus) == (6, 4)
    assert spec.S() == list(range(1, 9))
    assert spec.S_v() == [1, 2, 3, 4]


def test_spec_p7_d8():
    spec = fm.build_spec(7, 8)
    assert (spec.ell, spec.genus) == (2, 3)
    assert spec.S() == [1, 2, 3, 5, 6, 7]


def test_orbits_p2_d9():
    orbs = [list(map(int, o)) for o in fm.orbits(fm.build_spec(2, 9))]
    assert orbs == [[1, 2, 4, 8, 7, 5], [3, 6]]


@pytest.mark.parametrize("a, pat", [(1, "fffvvv"), (3, "fvfvfv"), (6, "vfvfvf")])
def test_patterns_p2_d9(a, pat):
    assert fm.pattern(fm.build_spec(2, 9), a) == pat


def test_pattern_rejects_outside_S():
    with pytest.raises(BT1Error):
        fm.pattern(fm.build_spec(3, 8), 4)


def test_eo_p2_d9():
    spec = fm.build_spec(2, 9)
    rle, table = fm.eo_type(spec)
    assert rle.expand().psi == (0, 1, 1, 2)
    assert table.live_f_words() == ["fffvvv", "ffvvvf", "fvfvfv", "fvvvff"]
    assert fm.word_multiset(spec) == parse_multiset("fv,fffvvv")


def test_eo_p3_d8():
    rle, _ = fm.eo_type(fm.build_spec(3, 8))
    assert rle.expand().psi == (1, 2, 2)


def test_superspecial_p7_d8():
    m = fm.word_multiset(fm.build_spec(7, 8))
    assert m == parse_multiset("fv^3")
    assert invariants(m).superspecial


def test_ordinary_p7_d3():
    m = fm.word_multiset(fm.build_spec(7, 3))
    assert m == parse_multiset("f,v")
    assert invariants(m).ordinary


def test_powers_are_retracted():
    m = fm.word_multiset(fm.build_spec(3, 8))
    assert m.primitive
    assert m.dimension == 6


@pytest.mark.parametrize("p, d", [(4, 9), (3, 9), (2, 6)])
def test_bad_pairs(p, d):
    with pytest.raises(BT1Error):
        fm.build_spec(p, d)


def test_rational_case_is_trivial():
    spec = fm.build_spec(3, 2)
    assert spec.rational
    assert fm.pipeline_es(spec).psi == ()


def test_full_fermat_variant():
    spec = fm.build_spec(2, 5, fm.FERMAT)
    m = fm.word_multiset(spec)
    assert 2 * spec.genus == m.dimension == 12
    assert m.is_self_dual()
    assert fm.check_quotient_inclusion(fm.build_spec(2, 5))


def test_full_fermat_contains_quotient():
    big = fm.word_multiset(fm.build_spec(3, 7, fm.FERMAT))
    small = fm.word_multiset(fm.build_spec(3, 7))
    assert all(big[w] >= k for w, k in small.items())


def test_a_number_bruteforce_matches_words():
    for p, d in [(3, 7), (5, 12), (11, 40), (2, 9)]:
        assert fm.a_number_bruteforce(p, d) == invariants(fm.word_multiset(fm.build_spec(p, d))).a


def test_inverse_orientation_reverses_words():
    fwd = fm.word_multiset(fm.build_spec(3, 17))
    inv = fm.word_multiset(fm.build_spec(3, 17, orientation=fm.INVERSE))
    assert inv == type(fwd)({str(w)[::-1]: k for w, k in fwd.items()})


def test_p2_d5_invariants():
    m = fm.word_multiset(fm.build_spec(2, 5))
    assert fm.pipeline_es(fm.build_spec(2, 5)).psi == (0, 1)
    assert invariants(m) == InvariantBundle(2, 0, 1, 0, invariants(m).u11)
