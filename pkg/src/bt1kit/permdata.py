"""Partitioned sets with a permutation, and their dictionary with word multisets."""

from __future__ import annotations

import json
from collections import Counter, defaultdict
from collections.abc import Hashable, Iterable, Mapping
from dataclasses import dataclass, field

from .errors import InvalidPermutation, UnknownElement
from .words import CyclicWord, WordMultiset, is_primitive, least_rotation

_SWAP = str.maketrans("fv", "vf")


@dataclass(frozen=True)
class PartitionedPermutation:
    """A finite set ``S = S_f | S_v`` with a permutation ``perm``.

    ``elements`` fixes an iteration order; orbits are reported starting from
    their earliest element in that order.
    """

    elements: tuple
    f_part: frozenset
    perm: Mapping[Hashable, Hashable]
    _index: dict = field(init=False, repr=False, compare=False)

    def __post_init__(self) -> None:
        elements = tuple(self.elements)
        object.__setattr__(self, "elements", elements)
        object.__setattr__(self, "f_part", frozenset(self.f_part))
        object.__setattr__(self, "perm", dict(self.perm))
        index = {a: i for i, a in enumerate(elements)}
        if len(index) != len(elements):
            raise InvalidPermutation("duplicate element labels")
        object.__setattr__(self, "_index", index)
        if not self.f_part <= index.keys():
            raise InvalidPermutation("f-part contains unknown elements")
        if self.perm.keys() != index.keys():
            raise InvalidPermutation("perm must be defined on exactly the elements")
        images = set(self.perm.values())
        if images != index.keys():
            raise InvalidPermutation("perm is not a bijection of the elements")

    @classmethod
    def from_parts(cls, f_part: Iterable, v_part: Iterable, perm: Mapping) -> PartitionedPermutation:
        f_list, v_list = list(f_part), list(v_part)
        overlap = set(f_list) & set(v_list)
        if overlap:
            raise InvalidPermutation(f"elements tagged both f and v: {sorted(overlap, key=str)}")
        elements = sorted(f_list + v_list, key=_sort_key)
        return cls(tuple(elements), frozenset(f_list), perm)

    @property
    def v_part(self) -> frozenset:
        return frozenset(self.elements) - self.f_part

    def __len__(self) -> int:
        return len(self.elements)

    def tag(self, a) -> str:
        if a not in self._index:
            raise UnknownElement(f"{a!r} is not an element")
        return "f" if a in self.f_part else "v"

    def orbit(self, a) -> list:
        """``[a, pi(a), pi^2(a), ...]`` up to the orbit size."""
        if a not in self._index:
            raise UnknownElement(f"{a!r} is not an element")
        out = [a]
        b = self.perm[a]
        while b != a:
            out.append(b)
            b = self.perm[b]
        return out

    def orbits(self) -> list[list]:
        seen: set = set()
        out = []
        for a in self.elements:
            if a not in seen:
                orb = self.orbit(a)
                seen.update(orb)
                out.append(orb)
        return out

    def orbit_word(self, a) -> str:
        """The word ``u_{n-1} ... u_0`` with ``u_j = f`` iff ``pi^j(a)`` is in ``S_f``."""
        letters = ["f" if b in self.f_part else "v" for b in self.orbit(a)]
        return "".join(reversed(letters))

    def to_json(self) -> str:
        return json.dumps(self.to_dict(), sort_keys=True)

    def to_dict(self) -> dict:
        return {
            "elements": list(self.elements),
            "f": [a for a in self.elements if a in self.f_part],
            "v": [a for a in self.elements if a not in self.f_part],
            "perm": {str(a): self.perm[a] for a in self.elements},
        }

    @classmethod
    def from_json(cls, text: str | dict) -> PartitionedPermutation:
        data = json.loads(text) if isinstance(text, str) else text
        elements = [_freeze(a) for a in data["elements"]]
        by_str = {str(a): a for a in elements}
        if len(by_str) != len(elements):
            raise InvalidPermutation("element labels collide after str()")
        try:
            perm = {by_str[k]: _freeze(b) for k, b in data["perm"].items()}
        except KeyError as exc:
            raise InvalidPermutation(f"perm refers to unknown element {exc}") from None
        f_part = [_freeze(a) for a in data["f"]]
        v_part = [_freeze(a) for a in data["v"]]
        if sorted(map(str, f_part + v_part)) != sorted(by_str):
            raise InvalidPermutation("f and v must partition the elements")
        return cls(tuple(elements), frozenset(f_part), perm)


def _freeze(a):
    return tuple(_freeze(x) for x in a) if isinstance(a, list) else a


def _sort_key(a):
    return (type(a).__name__, a)


def orbit_word(P: PartitionedPermutation, a) -> str:
    return P.orbit_word(a)


def perm_to_words(P: PartitionedPermutation) -> WordMultiset:
    """One cyclic word per orbit.  Non-admissible data gives non-primitive words."""
    return WordMultiset(Counter(CyclicWord.of(P.orbit_word(orb[0])) for orb in P.orbits()))


def words_to_perm(m: WordMultiset) -> PartitionedPermutation:
    """Elements are the positions ``(word, j, copy)`` of each word, labelled 0, 1, ...

    The labelling agrees with the basis order of :func:`bt1kit.kraft.build_kraft`.
    Position ``j`` carries the letter ``u_j`` and ``perm`` sends ``j`` to ``j + 1``.
    """
    f_part = []
    perm = {}
    base = 0
    for cw, mult in m.items():
        w = cw.rep
        n = len(w)
        for c in range(mult):
            for j in range(n):
                a = base + c * n + j
                perm[a] = base + c * n + (j + 1) % n
                if w[n - 1 - j] == "f":
                    f_part.append(a)
        base += mult * n
    return PartitionedPermutation(tuple(range(base)), frozenset(f_part), perm)


def is_admissible(P: PartitionedPermutation) -> bool:
    return all(is_primitive(P.orbit_word(orb[0])) for orb in P.orbits())


def canonical_form(P: PartitionedPermutation) -> tuple[tuple[str, int], ...]:
    """Sorted ``(least rotation of orbit word, orbit size)`` pairs.

    This is a complete isomorphism invariant: an orbit is determined up to
    isomorphism by its cyclic word.
    """
    return tuple(sorted((least_rotation(P.orbit_word(o[0])), len(o)) for o in P.orbits()))


def is_isomorphic(P: PartitionedPermutation, Q: PartitionedPermutation) -> bool:
    return canonical_form(P) == canonical_form(Q)


def duality_bijection(P: PartitionedPermutation) -> dict | None:
    """A bijection ``iota`` with ``iota(S_f) = S_v`` commuting with ``perm``, or None.

    Orbits are paired with orbits whose word is a rotation of the complement;
    the alignment inside a pair is then fixed by matching letters.
    """
    orbits = P.orbits()
    keys = [least_rotation(P.orbit_word(o[0])) for o in orbits]
    unused: dict[str, list[int]] = defaultdict(list)
    for t, key in enumerate(keys):
        unused[key].append(t)
    iota: dict = {}
    for t, orb in enumerate(orbits):
        if t not in unused[keys[t]]:
            continue
        unused[keys[t]].remove(t)
        pool = unused[least_rotation(P.orbit_word(orb[0]).translate(_SWAP))]
        if pool:
            u = pool.pop(0)
        elif keys[t] == least_rotation(keys[t].translate(_SWAP)):
            u = t  # self-dual word paired with itself
        else:
            return None
        partner = orbits[u]
        shift = _complement_shift(P, orb, partner)
        if shift is None:
            return None
        n = len(orb)
        for j in range(n):
            iota[orb[j]] = partner[(j + shift) % n]
            if u != t:
                iota[partner[(j + shift) % n]] = orb[j]
    return iota if _is_duality(P, iota) else None


def _complement_shift(P: PartitionedPermutation, orb: list, partner: list) -> int | None:
    if len(orb) != len(partner):
        return None
    n = len(orb)
    tags = [a in P.f_part for a in orb]
    ptags = [b in P.f_part for b in partner]
    for shift in range(n):
        if all(tags[j] != ptags[(j + shift) % n] for j in range(n)):
            return shift
    return None


def _is_duality(P: PartitionedPermutation, iota: dict) -> bool:
    if iota.keys() != set(P.elements) or set(iota.values()) != set(P.elements):
        return False
    if {iota[a] for a in P.f_part} != P.v_part:
        return False
    return all(P.perm[iota[a]] == iota[P.perm[a]] for a in P.elements)


def is_self_dual_perm(P: PartitionedPermutation) -> bool:
    return duality_bijection(P) is not None
