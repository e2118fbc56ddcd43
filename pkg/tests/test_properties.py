from hypothesis import given, settings
from hypothesis import strategies as st

from bt1kit.canonical import canonical_filtration_oracle, dual_canonical, words_to_canonical
from bt1kit.eo import ElementarySequence, RunLengthEO, canonical_from_es, es_from_canonical
from bt1kit.invariants import invariants, invariants_from_es
from bt1kit.kraft import build_kraft
from bt1kit.permdata import perm_to_words, words_to_perm
from bt1kit.words import CyclicWord, WordMultiset, lyndon_words, rotate

LYNDON = [w for n in range(1, 8) for w in lyndon_words(n)]

words = st.text(alphabet="fv", min_size=1, max_size=12)
multisets = st.dictionaries(st.sampled_from(LYNDON), st.integers(1, 3), min_size=1, max_size=4).map(WordMultiset)
self_dual = multisets.map(lambda m: m + m.complement())


@st.composite
def elementary_sequences(draw, gmax=10):
    g = draw(st.integers(0, gmax))
    psi, prev = [], 0
    for _ in range(g):
        prev += draw(st.integers(0, 1))
        psi.append(prev)
    return ElementarySequence(tuple(psi))


@given(words, st.integers(-20, 20))
def test_rotation_preserves_cyclic_word(w, k):
    assert CyclicWord.of(rotate(w, k)) == CyclicWord.of(w)


@given(multisets, multisets)
def test_invariants_are_additive(m1, m2):
    four = lambda inv: (inv.p_rank, inv.a, inv.s11, inv.u11)  # noqa: E731
    assert four(invariants(m1 + m2)) == four(invariants(m1) + invariants(m2))


@given(multisets)
def test_invariant_inequalities(m):
    inv = invariants(m)
    assert 0 <= inv.s11 <= inv.u11 <= inv.a


@given(self_dual)
def test_bounds_by_genus_when_self_dual(m):
    inv = invariants(m)
    assert inv.check()
    es = es_from_canonical(words_to_canonical(m)[0])
    assert invariants_from_es(es) == (inv.p_rank, inv.a)


@given(multisets)
def test_dual_is_involution_and_matches_complement(m):
    ct, _ = words_to_canonical(m)
    d = dual_canonical(ct)
    assert dual_canonical(d) == ct
    assert d == words_to_canonical(m.complement())[0]
    assert ct.is_self_dual() == m.is_self_dual()


@settings(max_examples=40, deadline=None)
@given(multisets)
def test_words_agree_with_subspace_oracle(m):
    assert words_to_canonical(m)[0] == canonical_filtration_oracle(build_kraft(m))[1]


@given(multisets)
def test_perm_round_trip(m):
    assert perm_to_words(words_to_perm(m)) == m


@given(elementary_sequences())
def test_rle_round_trip(es):
    rle = RunLengthEO.from_psi(es.psi)
    assert rle.expand() == es
    assert RunLengthEO.parse(rle.ascii()) == rle
    assert RunLengthEO.parse(rle.unicode()) == rle


@settings(max_examples=60)
@given(elementary_sequences(gmax=9))
def test_es_round_trip_beyond_exhaustive_range(es):
    assert es_from_canonical(canonical_from_es(es)) == es
