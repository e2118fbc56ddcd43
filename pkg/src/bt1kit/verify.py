"""Self-checks comparing independent routes.  Each suite returns a :class:`SuiteResult`."""

from __future__ import annotations

import random
from collections import Counter
from collections.abc import Callable, Iterable
from dataclasses import dataclass, field
from itertools import product

from . import fermat as fm
from .canonical import canonical_filtration_oracle, canonical_to_perm, dual_canonical, words_to_canonical
from .eo import ElementarySequence, canonical_from_es, es_from_canonical
from .invariants import invariants, invariants_from_es, invariants_from_multiplicities
from .kraft import build_kraft
from .permdata import is_admissible, is_self_dual_perm, perm_to_words
from .tables import golden_rows
from .words import CyclicWord, WordMultiset, lyndon_words, primitive_multisets

DEFAULT_P = (2, 3, 5, 7, 11, 13)


@dataclass
class SuiteResult:
    name: str
    checks: int = 0
    failures: list[str] = field(default_factory=list)
    notes: list[str] = field(default_factory=list)

    @property
    def ok(self) -> bool:
        return not self.failures

    def check(self, cond: bool, what: Callable[[], str] | str) -> bool:
        self.checks += 1
        if not cond:
            self.failures.append(what() if callable(what) else what)
        return cond

    def summary(self) -> str:
        head = f"{self.name}: {'PASS' if self.ok else 'FAIL'} ({self.checks} checks"
        head += f", {len(self.failures)} failed)" if self.failures else ")"
        lines = [head] + [f"  note: {n}" for n in self.notes]
        if self.failures:
            lines.append(f"  first counterexample: {self.failures[0]}")
        return "\n".join(lines)


def suite_tables(gmax: int = 4) -> SuiteResult:
    res = SuiteResult("tables")
    rows = golden_rows(gmax)
    res.notes.append(f"{len(rows)} rows ({sum(r.derived for r in rows)} from the prefix rule)")
    for row in rows:
        m = row.multiset
        ct, _ = words_to_canonical(m)
        es = es_from_canonical(ct)
        res.check(es == row.es, lambda: f"{row.words}: ES {es} != {row.es}")
        back = perm_to_words(canonical_to_perm(canonical_from_es(row.es))).retract()
        res.check(back == m, lambda: f"{row.es}: multiset {back} != {row.words}")
        got = invariants(m)
        want = (row.g, row.p_rank, row.a, row.s11, row.u11)
        have = (got.g, got.p_rank, got.a, got.s11, got.u11)
        res.check(have == want, lambda: f"{row.words}: invariants {have} != {want}")
        res.check(invariants_from_es(row.es) == (row.p_rank, row.a), lambda: f"{row.es}: ES route")
    return res


def check_oracle(m: WordMultiset, res: SuiteResult) -> None:
    ct, _ = words_to_canonical(m)
    _, oracle = canonical_filtration_oracle(build_kraft(m))
    res.check(ct == oracle, lambda: f"{m}: words give {ct}, oracle gives {oracle}")
    res.check(ct.is_valid(), lambda: f"{m}: {ct} fails the axioms")
    P = canonical_to_perm(ct)
    res.check(is_admissible(P), lambda: f"{m}: permutation is not admissible")
    res.check(perm_to_words(P).retract() == m.retract(), lambda: f"{m}: permutation words differ")


def suite_oracle(max_len: int = 10) -> SuiteResult:
    res = SuiteResult("oracle")
    count = 0
    for m in primitive_multisets(max_len):
        count += 1
        check_oracle(m, res)
    res.notes.append(f"{count} multisets of dimension <= {max_len}")
    return res


def check_fermat(p: int, d: int, res: SuiteResult) -> None:
    spec = fm.build_spec(p, d)
    rle, table = fm.eo_type(spec)
    m = fm.word_multiset(spec)
    es = fm.pipeline_es(spec)
    tag = f"p={p} d={d}"
    res.check(rle.expand() == es, lambda: f"{tag}: pattern EO {rle.expand()} != pipeline {es}")
    inv = invariants(m)
    inv_mu = invariants_from_multiplicities(table, spec.ell)
    res.check(inv == inv_mu, lambda: f"{tag}: word route {inv} != multiplicity route {inv_mu}")
    res.check(invariants_from_es(es) == (inv.p_rank, inv.a), lambda: f"{tag}: ES route disagrees")
    res.check(m.is_self_dual(), lambda: f"{tag}: multiset {m} is not self-dual")
    res.check(table.f_total() == spec.genus == table.v_total(), lambda: f"{tag}: f-word total {table.f_total()}")
    res.check(table.is_symmetric(), lambda: f"{tag}: mu(w) != mu(w^c)")
    res.check(inv.g == spec.genus, lambda: f"{tag}: genus {inv.g} != {spec.genus}")


def fermat_pairs(p_list: Iterable[int], d_max: int, d_min: int = 3) -> list[tuple[int, int]]:
    return [(p, d) for p in p_list for d in range(d_min, d_max + 1) if d % p]


def suite_fermat(p_list: Iterable[int] = DEFAULT_P, d_max: int = 200) -> SuiteResult:
    res = SuiteResult("fermat")
    pairs = fermat_pairs(p_list, d_max)
    for p, d in pairs:
        check_fermat(p, d, res)
        spec = fm.build_spec(p, d)
        res.check(fm.check_quotient_inclusion(spec), f"p={p} d={d}: quotient inclusion")
    res.notes.append(f"{len(pairs)} (p, d) pairs")
    return res


def suite_encompassing(p_list: Iterable[int] = (3, 5, 7), lmax: int = 4, digit_lmax: int = 3) -> SuiteResult:
    res = SuiteResult("encompassing")
    for p in p_list:
        for ell in range(1, lmax + 1):
            d = p**ell - 1
            if d <= 2:
                continue
            spec = fm.build_spec(p, d)
            tag = f"p={p} ell={ell}"
            rle, table = fm.eo_type(spec)
            closed = fm.encompassing_eo(p, ell)
            res.check(closed == rle, lambda: f"{tag}: closed {closed} != {rle}")
            res.check(closed.expand() == fm.pipeline_es(spec), f"{tag}: closed EO != pipeline")
            res.check(fm.encompassing_table(p, ell) == table, f"{tag}: pattern multiplicities")
            for t in _all_words(ell):
                want = sum(k for w, k in table.items() if w.endswith(t))
                got = fm.encompassing_suffix_multiplicity(p, ell, t)
                res.check(got == want, lambda: f"{tag}: mu(---{t}) = {want}, formula {got}")
            inv = invariants(fm.word_multiset(spec))
            res.check(fm.encompassing_invariants(p, ell) == inv, lambda: f"{tag}: invariants {inv}")
            res.check(fm.encompassing_invariants_from_suffixes(p, ell) == inv, f"{tag}: suffix invariants")
            if ell <= digit_lmax and p <= 5:
                res.check(fm.encompassing_digit_table(p, ell) == table, f"{tag}: digit model")
    return res


def suite_hermitian(p_list: Iterable[int] = (3, 5, 7, 11), lmax: int = 3) -> SuiteResult:
    res = SuiteResult("hermitian")
    for p in p_list:
        for lam in range(1, lmax + 1):
            d = p**lam + 1
            spec = fm.build_spec(p, d)
            tag = f"p={p} lambda={lam}"
            rle, table = fm.eo_type(spec)
            closed = fm.hermitian_eo(p, lam)
            res.check(closed == rle, lambda: f"{tag}: closed {closed} != {rle}")
            res.check(closed.expand() == fm.pipeline_es(spec), f"{tag}: closed EO != pipeline")
            res.check(fm.hermitian_table(p, lam) == table, f"{tag}: full pattern multiplicities")
            half = {b: fm.half_pattern(p, lam, b) for b in spec.S()}
            res.check(all(fm.pattern(spec, b) == _swap(w) + w for b, w in half.items()), f"{tag}: pattern = c(pat') pat'")
            counts = Counter(half.values())
            res.check(counts == +fm.hermitian_half_table(p, lam), f"{tag}: half multiplicities")
            if lam <= 3 and p <= 7:
                res.check(fm.hermitian_digit_table(p, lam) == counts, f"{tag}: digit model")
            for t in _all_words(lam):
                want = sum(k for w, k in counts.items() if w.endswith(t))
                res.check(fm.hermitian_half_suffix(p, lam, t) == want, f"{tag}: mu'(---{t})")
            inv = invariants(fm.word_multiset(spec))
            res.check(fm.hermitian_invariants(p, lam) == inv, lambda: f"{tag}: invariants {inv}")
    return res


def suite_p2(d_max: int = 201, orientation: str = fm.FORWARD) -> SuiteResult:
    res = SuiteResult("p2")
    res.notes.append(f"orientation {orientation}")
    for d in range(3, d_max + 1, 2):
        spec = fm.build_spec(2, d, orientation=orientation)
        rle, bundle = fm.p2_eo(d, orientation)
        inv = invariants(fm.word_multiset(spec))
        es = fm.pipeline_es(spec)
        res.check(rle.expand() == es, lambda: f"d={d}: closed EO {rle.expand()} != pipeline {es}")
        res.check(fm.eo_type(spec)[0].expand() == es, f"d={d}: pattern EO != pipeline")
        res.check(bundle == inv, lambda: f"d={d}: closed {bundle} != {inv}")
    return res


def suite_anumber(p_list: Iterable[int] = (3, 5, 7, 11, 13), d_max: int = 500) -> SuiteResult:
    res = SuiteResult("anumber")
    worst = 0.0
    for p, d in fermat_pairs(p_list, d_max):
        a = fm.a_number_closed(p, d)
        brute = fm.a_number_bruteforce(p, d)
        res.check(a == brute, lambda: f"p={p} d={d}: floor sum {a} != count {brute}")
        special = fm.a_number_special(p, d)
        if special is not None:
            res.check(special == brute, lambda: f"p={p} d={d}: special case {special} != {brute}")
        dev, bound = fm.a_number_deviation(p, d)
        worst = max(worst, dev - bound)
    res.notes.append(f"max of |a - (p-1)d/4p| - (p-1)^2/4p over the range: {worst:.4f}")
    return res


def suite_ordinary(p_list: Iterable[int] = DEFAULT_P, d_max: int = 200) -> SuiteResult:
    res = SuiteResult("ordinary")
    for p, d in fermat_pairs(p_list, d_max):
        inv = invariants(fm.word_multiset(fm.build_spec(p, d)))
        res.check(fm.is_ordinary(p, d) == inv.ordinary, f"p={p} d={d}: ordinary")
        res.check(fm.is_superspecial(p, d) == inv.superspecial, f"p={p} d={d}: superspecial")
    return res


def random_multiset(rng: random.Random, max_terms: int = 4, max_len: int = 6, max_mult: int = 3) -> WordMultiset:
    pool = [w for n in range(1, max_len + 1) for w in lyndon_words(n)]
    return WordMultiset({CyclicWord(rng.choice(pool)): rng.randint(1, max_mult) for _ in range(rng.randint(1, max_terms))})


def suite_duality(samples: int = 1000, seed: int = 0) -> SuiteResult:
    res = SuiteResult("duality")
    rng = random.Random(seed)
    for _ in range(samples):
        m = random_multiset(rng)
        if rng.random() < 0.3:
            m = m + m.complement()
        ct, _ = words_to_canonical(m)
        dual = dual_canonical(ct)
        res.check(dual_canonical(dual) == ct, lambda: f"{m}: dual is not an involution")
        res.check(dual.is_valid(), lambda: f"{m}: dual {dual} fails the axioms")
        res.check(dual == words_to_canonical(m.complement())[0], lambda: f"{m}: dual type != type of complement")
        res.check(m.is_self_dual() == ct.is_self_dual(), lambda: f"{m}: word and type self-duality differ")
        res.check(is_self_dual_perm(canonical_to_perm(ct)) == ct.is_self_dual(), lambda: f"{m}: permutation duality")
    return res


def suite_es(gmax: int = 6) -> SuiteResult:
    res = SuiteResult("es")
    for g in range(gmax + 1):
        for es in ElementarySequence.all(g):
            ct = canonical_from_es(es)
            res.check(ct.is_valid() and (g == 0 or ct.is_self_dual()), lambda: f"{es}: bad type {ct}")
            res.check(es_from_canonical(ct) == es, lambda: f"{es}: round trip gives {es_from_canonical(ct)}")
    return res


SUITES: dict[str, Callable[..., SuiteResult]] = {
    "tables": suite_tables,
    "oracle": suite_oracle,
    "fermat": suite_fermat,
    "encompassing": suite_encompassing,
    "hermitian": suite_hermitian,
    "p2": suite_p2,
    "anumber": suite_anumber,
    "duality": suite_duality,
    "ordinary": suite_ordinary,
    "es": suite_es,
}


def _all_words(n: int) -> list[str]:
    return ["".join(t) for L in range(1, n + 1) for t in product("fv", repeat=L)]


def _swap(w: str) -> str:
    return w.translate(str.maketrans("fv", "vf"))
