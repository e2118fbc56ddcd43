"""Words and cyclic words on the alphabet {f, v}.

A word is stored as a plain ``str`` over ``"fv"``.  For ``w = u_{n-1} ... u_0``
the letter ``u_0`` is the *last* (rightmost) character, so ``u_j`` is
``w[len(w) - 1 - j]``.  Python's string order already agrees with the
lexicographic order used throughout (``"f" < "v"``, leftmost letter first).
"""

from __future__ import annotations

import re
from collections.abc import Iterable, Iterator, Mapping
from dataclasses import dataclass
from functools import total_ordering
from math import lcm

from .errors import EmptyWord, NotMixed, NotPrimitive, ParseError

LETTERS = "fv"
_WORD_RE = re.compile(r"^[fv]+$")
_TERM_RE = re.compile(r"^([fv]+)(?:\^(\d+))?$")
_SWAP = str.maketrans("fv", "vf")


def check_word(w: str) -> str:
    """Return ``w`` unchanged if it is a nonempty word over {f, v}."""
    if not isinstance(w, str):
        raise TypeError(f"word must be a str, got {type(w).__name__}")
    if not w:
        raise EmptyWord("the empty word is not allowed here")
    if not _WORD_RE.match(w):
        raise ParseError(f"not a word over {{f,v}}: {w!r}")
    return w


def letter(w: str, j: int) -> str:
    """The letter ``u_j`` of ``w`` (``u_0`` is the last character)."""
    return w[len(w) - 1 - j]


def rotate(w: str, n: int = 1) -> str:
    """Apply ``n`` times the rotation ``u_{l-1}...u_1 u_0 -> u_0 u_{l-1}...u_1``."""
    check_word(w)
    n %= len(w)
    if n == 0:
        return w
    return w[-n:] + w[:-n]


def rotations(w: str) -> list[str]:
    """All ``len(w)`` rotations, ``rotations(w)[j] == rotate(w, j)``."""
    check_word(w)
    return [rotate(w, j) for j in range(len(w))]


def period(w: str) -> int:
    """Smallest ``q`` dividing ``len(w)`` with ``rotate(w, q) == w``."""
    check_word(w)
    n = len(w)
    # smallest q with w == w[q:] + w[:q] is the primitive root length
    q = (w + w).find(w, 1)
    return q if n % q == 0 else n


def is_primitive(w: str) -> bool:
    return period(w) == len(w)


def primitive_root(w: str) -> tuple[str, int]:
    """Write ``w = root**e`` with ``root`` primitive."""
    q = period(w)
    return w[:q], len(w) // q


def complement(w: str) -> str:
    return w.translate(_SWAP)


def least_rotation(w: str) -> str:
    """Lexicographically least rotation (Booth's algorithm, linear time)."""
    check_word(w)
    s = w + w
    fail = [-1] * len(s)
    k = 0
    for j in range(1, len(s)):
        c = s[j]
        i = fail[j - k - 1]
        while i != -1 and c != s[k + i + 1]:
            if c < s[k + i + 1]:
                k = j - i - 1
            i = fail[i]
        if c != s[k + i + 1]:
            if c < s[k]:
                k = j
            fail[j - k] = -1
        else:
            fail[j - k] = i + 1
    return s[k : k + len(w)]


def blocks(w: str) -> list[tuple[str, int]]:
    """Maximal runs of ``w`` read left to right, e.g. ``ffv -> [(f,2), (v,1)]``."""
    out: list[tuple[str, int]] = []
    for c in check_word(w):
        if out and out[-1][0] == c:
            out[-1] = (c, out[-1][1] + 1)
        else:
            out.append((c, 1))
    return out


def breaks(w: str, wrap: bool = True) -> frozenset[int]:
    """Positions ``j`` with ``u_{j+1} != u_j``.

    With ``wrap`` the position ``len(w) - 1`` counts when ``u_0 != u_{l-1}``.
    """
    check_word(w)
    n = len(w)
    out = {j for j in range(n - 1) if letter(w, j + 1) != letter(w, j)}
    if wrap and n > 1 and w[0] != w[-1]:
        out.add(n - 1)
    return frozenset(out)


def break_count_k(i: int) -> int:
    """Number of (non wrap-around) breaks of the i-th f-initial word.

    Uses the recursion ``k(0) = 0`` and ``k(i) = k(2**(j+1) - 1 - i) + 1``
    for ``2**j <= i < 2**(j+1)``.  The value does not depend on the word
    length once it exceeds ``i.bit_length()``.
    """
    if i < 0:
        raise ValueError("i must be >= 0")
    count = 0
    while i:
        j = i.bit_length() - 1
        i = (1 << (j + 1)) - 1 - i
        count += 1
    return count


def word_index(w: str) -> int:
    """Binary value of ``w`` with f = 0, v = 1, most significant letter first."""
    return int(check_word(w).replace("f", "0").replace("v", "1"), 2)


def index_word(i: int, length: int) -> str:
    """Inverse of :func:`word_index` for words of the given length."""
    if not 0 <= i < (1 << length):
        raise ValueError(f"{i} does not fit in {length} letters")
    return format(i, "b").zfill(length).replace("0", "f").replace("1", "v")


def is_mixed_vf(w: str) -> bool:
    return w[0] == "v" and w[-1] == "f"


def exp_notation(w: str) -> list[tuple[int, int]]:
    """Exponents ``[(m_1, n_1), ..., (m_r, n_r)]`` of ``w = v^{n_r} f^{m_r} ... v^{n_1} f^{m_1}``.

    A word that already starts with v and ends with f is read as is.
    Otherwise the least rotation with that property is used.
    """
    return _exp_pairs(normalize_vf(w))


def normalize_vf(w: str) -> str:
    check_word(w)
    if "f" not in w or "v" not in w:
        raise NotMixed(f"{w!r} uses only one letter")
    if not is_primitive(w):
        raise NotPrimitive(f"{w!r} is a proper power")
    if is_mixed_vf(w):
        return w
    return min(r for r in rotations(w) if is_mixed_vf(r))


def _exp_pairs(w: str) -> list[tuple[int, int]]:
    runs = blocks(w)[::-1]  # rightmost run (an f-run) first
    return [(runs[t][1], runs[t + 1][1]) for t in range(0, len(runs), 2)]


@total_ordering
@dataclass(frozen=True)
class CyclicWord:
    """Rotation class of a word, stored by its least rotation."""

    rep: str

    def __post_init__(self) -> None:
        check_word(self.rep)
        if least_rotation(self.rep) != self.rep:
            raise ValueError(f"{self.rep!r} is not a least rotation; use CyclicWord.of")

    @classmethod
    def of(cls, w: str) -> CyclicWord:
        return cls(least_rotation(w))

    @property
    def length(self) -> int:
        return len(self.rep)

    @property
    def is_primitive(self) -> bool:
        return is_primitive(self.rep)

    def complement(self) -> CyclicWord:
        return CyclicWord.of(complement(self.rep))

    def primitive_root(self) -> tuple[CyclicWord, int]:
        root, e = primitive_root(self.rep)
        return CyclicWord.of(root), e

    def __lt__(self, other: CyclicWord) -> bool:
        return (len(self.rep), self.rep) < (len(other.rep), other.rep)

    def __str__(self) -> str:
        return self.rep


class WordMultiset(Mapping[CyclicWord, int]):
    """Finite multiset of cyclic words (the Kraft datum).

    Accepts cyclic words or plain strings as keys; strings are reduced to
    their rotation class.  Zero multiplicities are dropped.
    """

    __slots__ = ("_entries", "_hash")

    def __init__(self, entries: Mapping | Iterable | None = None) -> None:
        acc: dict[CyclicWord, int] = {}
        if entries is None:
            items: Iterable = ()
        elif isinstance(entries, Mapping):
            items = entries.items()
        else:
            items = ((w, 1) for w in entries)
        for key, mult in items:
            cw = key if isinstance(key, CyclicWord) else CyclicWord.of(key)
            if not isinstance(mult, int) or mult < 0:
                raise ValueError(f"multiplicity of {cw} must be a nonnegative int, got {mult!r}")
            if mult:
                acc[cw] = acc.get(cw, 0) + mult
        self._entries = dict(sorted(acc.items()))
        self._hash: int | None = None

    def __getitem__(self, key: CyclicWord | str) -> int:
        cw = key if isinstance(key, CyclicWord) else CyclicWord.of(key)
        return self._entries[cw]

    def get(self, key, default=0):  # type: ignore[override]
        try:
            return self[key]
        except KeyError:
            return default

    def __iter__(self) -> Iterator[CyclicWord]:
        return iter(self._entries)

    def __len__(self) -> int:
        return len(self._entries)

    def __eq__(self, other: object) -> bool:
        if isinstance(other, WordMultiset):
            return self._entries == other._entries
        return NotImplemented

    def __hash__(self) -> int:
        if self._hash is None:
            self._hash = hash(frozenset(self._entries.items()))
        return self._hash

    def __add__(self, other: WordMultiset) -> WordMultiset:
        merged = dict(self._entries)
        for cw, m in other.items():
            merged[cw] = merged.get(cw, 0) + m
        return WordMultiset(merged)

    def __repr__(self) -> str:
        return f"WordMultiset({format_multiset(self)!r})"

    def __str__(self) -> str:
        return format_multiset(self)

    @property
    def dimension(self) -> int:
        """Total length, i.e. the dimension of the associated module."""
        return sum(cw.length * m for cw, m in self._entries.items())

    @property
    def primitive(self) -> bool:
        return all(cw.is_primitive for cw in self._entries)

    @property
    def lengths(self) -> list[int]:
        return [cw.length for cw in self._entries]

    def period_lcm(self) -> int:
        return lcm(*self.lengths) if self._entries else 1

    def complement(self) -> WordMultiset:
        return WordMultiset({cw.complement(): m for cw, m in self._entries.items()})

    def is_self_dual(self) -> bool:
        return self.retract() == self.retract().complement()

    def retract(self) -> WordMultiset:
        """Replace each ``(w')^e`` by ``w'`` with multiplicity multiplied by ``e``."""
        out: dict[CyclicWord, int] = {}
        for cw, m in self._entries.items():
            root, e = cw.primitive_root()
            out[root] = out.get(root, 0) + m * e
        return WordMultiset(out)


def parse_multiset(text: str) -> WordMultiset:
    """Parse ``"fv^2,ffvv"``-style input.  Whitespace around terms is ignored."""
    text = text.strip()
    if not text:
        raise ParseError("empty multiset string")
    acc: dict[CyclicWord, int] = {}
    for raw in text.split(","):
        term = raw.strip()
        match = _TERM_RE.match(term)
        if not match:
            raise ParseError(f"bad multiset term {term!r}")
        mult = int(match.group(2)) if match.group(2) is not None else 1
        if mult < 1:
            raise ParseError(f"multiplicity must be positive in {term!r}")
        cw = CyclicWord.of(match.group(1))
        acc[cw] = acc.get(cw, 0) + mult
    return WordMultiset(acc)


def format_multiset(m: Mapping[CyclicWord, int]) -> str:
    return ",".join(cw.rep if k == 1 else f"{cw.rep}^{k}" for cw, k in m.items())


def lyndon_words(n: int) -> Iterator[str]:
    """Primitive least rotations of length ``n`` in increasing order (Duval's algorithm)."""
    if n < 1:
        return
    w = [-1]
    while w:
        w[-1] += 1
        if len(w) == n:
            yield "".join(LETTERS[c] for c in w)
        m = len(w)
        while len(w) < n:
            w.append(w[len(w) - m])
        while w and w[-1] == 1:
            w.pop()


def primitive_multisets(max_dim: int, min_dim: int = 1) -> Iterator[WordMultiset]:
    """Every multiset of primitive cyclic words with dimension in ``[min_dim, max_dim]``."""
    pool = [CyclicWord(w) for n in range(1, max_dim + 1) for w in lyndon_words(n)]

    def rec(start: int, budget: int, acc: dict[CyclicWord, int]) -> Iterator[dict[CyclicWord, int]]:
        yield acc
        for t in range(start, len(pool)):
            cw = pool[t]
            if cw.length > budget:
                continue
            for k in range(1, budget // cw.length + 1):
                acc[cw] = k
                yield from rec(t + 1, budget - k * cw.length, acc)
            del acc[cw]

    for entries in rec(0, max_dim, {}):
        m = WordMultiset(entries)
        if m.dimension >= min_dim:
            yield m
