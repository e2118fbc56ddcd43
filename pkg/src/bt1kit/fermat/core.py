"""Permutation data of the curves y^d = x(1 - x) and of the Fermat curves x^d + y^d = 1."""

from __future__ import annotations

from collections import Counter
from collections.abc import Iterator
from dataclasses import dataclass
from math import gcd

import numpy as np

from .. import _kernels
from ..canonical import words_to_canonical
from ..eo import FLAT, UP, ElementarySequence, RunLengthEO, es_from_canonical
from ..errors import NotCoprime, NotPrime, UnknownElement
from ..permdata import PartitionedPermutation
from ..words import CyclicWord, WordMultiset

QUOTIENT = "quotient"
FERMAT = "fermat"
FORWARD = "forward"
INVERSE = "inverse"


def is_prime(n: int) -> bool:
    if n < 2:
        return False
    if n % 2 == 0:
        return n == 2
    q = 3
    while q * q <= n:
        if n % q == 0:
            return False
        q += 2
    return True


def multiplicative_order(p: int, d: int) -> int:
    if d == 1:
        return 1
    x, ell = p % d, 1
    while x != 1:
        x = x * p % d
        ell += 1
    return ell


@dataclass(frozen=True)
class FermatSpec:
    p: int
    d: int
    ell: int
    variant: str = QUOTIENT
    orientation: str = FORWARD

    @property
    def step(self) -> int:
        """Multiplier of the permutation: ``p``, or ``p^{-1} mod d`` for the inverse orientation."""
        if self.orientation == INVERSE:
            return pow(self.p, -1, self.d) if self.d > 1 else 0
        return self.p % self.d

    @property
    def genus(self) -> int:
        if self.variant == FERMAT:
            return (self.d - 1) * (self.d - 2) // 2
        return (self.d - 1) // 2

    @property
    def rational(self) -> bool:
        return self.genus == 0

    def in_S(self, a: int) -> bool:
        return 0 < a < self.d and 2 * a != self.d

    def S(self) -> list[int]:
        return [a for a in range(1, self.d) if 2 * a != self.d]

    def S_f(self) -> list[int]:
        return [a for a in range(1, self.d) if 2 * a > self.d]

    def S_v(self) -> list[int]:
        return [a for a in range(1, self.d) if 2 * a < self.d]

    def pi(self, a: int) -> int:
        return self.step * a % self.d

    def __str__(self) -> str:
        return f"p={self.p} d={self.d} ell={self.ell} genus={self.genus}"


def build_spec(p: int, d: int, variant: str = QUOTIENT, orientation: str = FORWARD) -> FermatSpec:
    """Validated data for the pair ``(p, d)``.

    ``orientation="inverse"`` iterates ``a -> a/p`` instead of ``a -> pa``,
    which reverses every orbit word.
    """
    if not is_prime(p):
        raise NotPrime(f"p={p} is not prime")
    if d < 1:
        raise ValueError(f"d must be positive, got {d}")
    if gcd(p, d) != 1:
        raise NotCoprime(f"p={p} divides d={d}")
    if variant not in (QUOTIENT, FERMAT):
        raise ValueError(f"unknown variant {variant!r}")
    if orientation not in (FORWARD, INVERSE):
        raise ValueError(f"unknown orientation {orientation!r}")
    return FermatSpec(p, d, multiplicative_order(p, d), variant, orientation)


def orbits(spec: FermatSpec) -> list[np.ndarray]:
    """Orbits of ``a -> pa`` on S, each starting at its smallest element."""
    d = spec.d
    succ = (spec.step * np.arange(d, dtype=np.int64)) % d
    order, starts = _kernels.cycle_decompose(succ)
    out = []
    for k in range(starts.size - 1):
        cyc = order[starts[k] : starts[k + 1]]
        head = int(cyc[0])
        if head == 0 or 2 * head == d:
            continue
        out.append(cyc)
    return out


def _tags(cyc: np.ndarray, d: int) -> str:
    """Letters of ``a, pa, p^2 a, ...`` in that order (u_0 first)."""
    return "".join("f" if 2 * int(x) > d else "v" for x in cyc)


def orbit_words(spec: FermatSpec) -> Counter[str]:
    """Orbit word ``u_{n-1} ... u_0`` of each orbit, read from its smallest element."""
    return Counter(_tags(cyc, spec.d)[::-1] for cyc in orbits(spec))


def pattern(spec: FermatSpec, a: int) -> str:
    if not spec.in_S(a):
        raise UnknownElement(f"{a} is not in S for d={spec.d}")
    letters = []
    x = a
    for _ in range(spec.ell):
        letters.append("f" if 2 * x > spec.d else "v")
        x = x * spec.step % spec.d
    return "".join(reversed(letters))


class PatternTable(Counter):
    """Multiplicities ``mu(w)`` of length-ell patterns."""

    def __init__(self, ell: int, counts=None) -> None:
        super().__init__(counts or {})
        self.ell = ell

    @property
    def total(self) -> int:
        return sum(self.values())

    def f_total(self) -> int:
        return sum(k for w, k in self.items() if w[0] == "f")

    def v_total(self) -> int:
        return sum(k for w, k in self.items() if w[0] == "v")

    def is_symmetric(self) -> bool:
        swap = str.maketrans("fv", "vf")
        return all(self.get(w.translate(swap), 0) == k for w, k in self.items())

    def live_f_words(self) -> list[str]:
        return sorted(w for w, k in self.items() if k and w[0] == "f")


def pattern_table(spec: FermatSpec) -> PatternTable:
    """Patterns are the rotations of each orbit word, powered up to length ell."""
    table = PatternTable(spec.ell)
    for word, mult in orbit_words(spec).items():
        n = len(word)
        power = spec.ell // n
        for j in range(n):
            rot = word[n - j :] + word[: n - j] if j else word
            table[rot * power] += mult
    return table


def eo_from_patterns(table: PatternTable) -> RunLengthEO:
    """Up-run for live patterns ending in f, flat-run for those ending in v, in sorted order."""
    runs = [(UP if w[-1] == "f" else FLAT, table[w]) for w in table.live_f_words()]
    return RunLengthEO(tuple(runs)).normalize()


def eo_type(spec: FermatSpec) -> tuple[RunLengthEO, PatternTable]:
    table = pattern_table(spec)
    return eo_from_patterns(table), table


def word_multiset(spec: FermatSpec) -> WordMultiset:
    """Orbit words with proper powers replaced by their roots."""
    if spec.variant == FERMAT:
        return fermat_word_multiset(spec)
    return WordMultiset(orbit_words(spec)).retract()


def pipeline_es(spec: FermatSpec) -> ElementarySequence:
    """ES through the canonical type of the word multiset."""
    ct, _ = words_to_canonical(word_multiset(spec))
    return es_from_canonical(ct)


def perm_data(spec: FermatSpec) -> PartitionedPermutation:
    if spec.variant == FERMAT:
        T = list(fermat_elements(spec))
        f_part = frozenset(x for x in T if x[0] + x[1] > spec.d)
        return PartitionedPermutation(tuple(T), f_part, {x: sigma(spec, x) for x in T})
    S = spec.S()
    return PartitionedPermutation(tuple(S), frozenset(spec.S_f()), {a: spec.pi(a) for a in S})


# Fermat curve ---------------------------------------------------------------

def fermat_elements(spec: FermatSpec) -> Iterator[tuple[int, int]]:
    d = spec.d
    for a in range(1, d):
        for b in range(1, d):
            if a + b != d:
                yield a, b


def sigma(spec: FermatSpec, x: tuple[int, int]) -> tuple[int, int]:
    return spec.step * x[0] % spec.d, spec.step * x[1] % spec.d


def fermat_orbits(spec: FermatSpec) -> Iterator[list[tuple[int, int]]]:
    """Orbits of sigma on T, produced one at a time from their smallest element."""
    for x in fermat_elements(spec):
        orb = [x]
        y = sigma(spec, x)
        smallest = True
        while y != x:
            if y < x:
                smallest = False
                break
            orb.append(y)
            y = sigma(spec, y)
        if smallest:
            yield orb


def fermat_word_multiset(spec: FermatSpec) -> WordMultiset:
    d = spec.d
    words: Counter[CyclicWord] = Counter()
    for orb in fermat_orbits(spec):
        letters = "".join("f" if a + b > d else "v" for a, b in orb)
        words[CyclicWord.of(letters[::-1])] += 1
    return WordMultiset(words).retract()


def quotient_inclusion(spec: FermatSpec) -> dict[int, tuple[int, int]]:
    """``a -> (a, a)`` from S into T."""
    return {a: (a, a) for a in spec.S()}


def check_quotient_inclusion(spec: FermatSpec) -> bool:
    """The inclusion preserves the partition and commutes with the permutations."""
    fs = FermatSpec(spec.p, spec.d, spec.ell, FERMAT, spec.orientation)
    d = spec.d
    for a, x in quotient_inclusion(spec).items():
        if not (0 < x[0] < d and 0 < x[1] < d and x[0] + x[1] != d):
            return False
        if (2 * a > d) != (x[0] + x[1] > d):
            return False
        if sigma(fs, x) != (spec.pi(a), spec.pi(a)):
            return False
    return True


def a_number_bruteforce(p: int, d: int) -> int:
    """``#{a in S_v : pa in S_f}``."""
    return _kernels.count_v_to_f(p, d)
