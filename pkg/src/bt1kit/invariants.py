"""p-rank, a-number, s11 multiplicity, u11 number and the Selmer dimension.

Three routes are provided: directly from a word multiset, from a table of
length-ell pattern multiplicities, and (p-rank and a-number only) from an
elementary sequence.
"""

from __future__ import annotations

import json
from collections.abc import Mapping
from dataclasses import dataclass

from .eo import ElementarySequence
from .errors import InconsistentMultiplicities, NotPrimitive, NotPrimitiveMultiset
from .words import CyclicWord, WordMultiset, _exp_pairs, check_word, is_primitive, rotations

_F = CyclicWord("f")
_V = CyclicWord("v")
_FV = CyclicWord("fv")


@dataclass(frozen=True)
class InvariantBundle:
    g: int
    p_rank: int
    a: int
    s11: int
    u11: int

    @property
    def sel_dim(self) -> int:
        return self.a + self.u11 - self.s11

    @property
    def ordinary(self) -> bool:
        return self.p_rank == self.g

    @property
    def superspecial(self) -> bool:
        return self.a == self.g

    def check(self) -> bool:
        return 0 <= self.p_rank <= self.g and 0 <= self.s11 <= self.u11 <= self.a <= self.g

    def __add__(self, other: InvariantBundle) -> InvariantBundle:
        return InvariantBundle(
            self.g + other.g, self.p_rank + other.p_rank, self.a + other.a,
            self.s11 + other.s11, self.u11 + other.u11,
        )

    def to_dict(self) -> dict:
        return {"g": self.g, "p_rank": self.p_rank, "a": self.a, "s11": self.s11,
                "u11": self.u11, "sel_dim": self.sel_dim}

    def to_json(self) -> str:
        return json.dumps(self.to_dict())

    @classmethod
    def from_json(cls, text: str | dict) -> InvariantBundle:
        data = json.loads(text) if isinstance(text, str) else text
        out = cls(data["g"], data["p_rank"], data["a"], data["s11"], data["u11"])
        if "sel_dim" in data and data["sel_dim"] != out.sel_dim:
            raise ValueError("sel_dim is inconsistent with a, u11, s11")
        return out


def _require_primitive(m: WordMultiset) -> None:
    bad = [cw.rep for cw in m if not cw.is_primitive]
    if bad:
        raise NotPrimitiveMultiset(f"non-primitive words {bad}; pass the retraction instead")


def p_rank(m: WordMultiset) -> int:
    _require_primitive(m)
    return m.get(_F)


def word_a_number(w: str) -> int:
    """Rotations of ``w`` starting with v and ending with f."""
    check_word(w)
    n = len(w)
    return sum(w[i] == "f" and w[(i + 1) % n] == "v" for i in range(n))


def a_number(m: WordMultiset) -> int:
    _require_primitive(m)
    return sum(word_a_number(cw.rep) * k for cw, k in m.items())


def s11(m: WordMultiset) -> int:
    _require_primitive(m)
    return m.get(_FV)


def u_pairs(w: str) -> list[tuple[int, int]]:
    """Exponent pairs of a rotation with ``m_1 > 1`` or ``n_r > 1``."""
    check_word(w)
    if not is_primitive(w):
        raise NotPrimitive(f"{w!r} is a proper power")
    for rot in sorted(rotations(w)):
        if rot[0] == "v" and rot[-1] == "f":
            pairs = _exp_pairs(rot)
            if pairs[0][0] > 1 or pairs[-1][1] > 1:
                return pairs
    raise ValueError(f"{w!r} has no admissible block shift")


def word_u_number(w: str) -> int:
    """The u11 number of the indecomposable module M(w)."""
    check_word(w)
    if not is_primitive(w):
        raise NotPrimitive(f"{w!r} is a proper power")
    if "f" not in w or "v" not in w:
        return 0
    if len(w) == 2:
        return 1
    pairs = u_pairs(w)
    r = len(pairs)
    count = sum(m > 1 and n > 1 for m, n in pairs)
    for i in range(r):
        if pairs[i][0] == 1:
            continue
        # extend through a chain of (1, 1) relations ending in n_j > 1
        if pairs[i][1] != 1:
            continue
        for j in range(i + 1, r):
            m_j, n_j = pairs[j]
            if m_j != 1:
                break
            if n_j > 1:
                count += 1
                break
    return count


def u11(m: WordMultiset) -> int:
    _require_primitive(m)
    return sum(word_u_number(cw.rep) * k for cw, k in m.items())


def hom_dim_to_M11(w: str) -> int:
    """Dimension of Hom(M(w), M(fv)) for a primitive word."""
    cw = CyclicWord.of(check_word(w))
    if not cw.is_primitive:
        raise NotPrimitive(f"{w!r} is a proper power")
    if cw == _FV:
        return 1
    return word_u_number(w) + word_a_number(w)


def sel_dim(m: WordMultiset) -> int:
    return invariants(m).sel_dim


def invariants(m: WordMultiset) -> InvariantBundle:
    _require_primitive(m)
    return InvariantBundle(m.dimension // 2, p_rank(m), a_number(m), s11(m), u11(m))


def suffix_count(mu: Mapping[str, int], t: str) -> int:
    """``mu(---t)``: total multiplicity of patterns ending in ``t``."""
    return sum(k for w, k in mu.items() if len(w) >= len(t) and w.endswith(t))


def invariants_from_multiplicities(mu: Mapping[str, int], ell: int) -> InvariantBundle:
    """Invariants from the multiplicities of the length-``ell`` patterns."""
    if any(len(w) != ell for w, k in mu.items() if k):
        raise InconsistentMultiplicities(f"all patterns must have length {ell}")
    total = sum(mu.values())
    if total % 2:
        raise InconsistentMultiplicities("total multiplicity must be even")
    f = mu.get("f" * ell, 0)
    a = suffix_count(mu, "fv") if ell >= 2 else 0
    if ell >= 2 and suffix_count(mu, "vf") != a:
        raise InconsistentMultiplicities("mu(---fv) differs from mu(---vf)")
    s = mu.get("fv" * (ell // 2), 0) if ell % 2 == 0 else 0
    u = s + sum(suffix_count(mu, "vv" + "fv" * j + "ff") for j in range((ell - 4) // 2 + 1)) if ell >= 4 else s
    return InvariantBundle(total // 2, f, a, s, u)


def invariants_from_es(es: ElementarySequence) -> tuple[int, int]:
    """``(p_rank, a_number)``; s11 and u11 are not determined by the sequence."""
    return es.p_rank, es.a_number
