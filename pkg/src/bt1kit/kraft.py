"""Kraft modules M(w) and their direct sums.

F and V act monomially on a distinguished basis, so they are stored as partial
index maps.  Coordinate subspaces are encoded as Python ints used as bitmasks
(bit ``t`` set means basis vector ``t`` is in the span), which makes image and
preimage pure bit operations.
"""

from __future__ import annotations

from collections.abc import Iterable, Sequence
from dataclasses import dataclass, field
from typing import NamedTuple

from .errors import InvalidModule
from .words import WordMultiset, _exp_pairs, check_word, normalize_vf


class Label(NamedTuple):
    """Basis label ``e(i, j, c)``: word ``i``, position ``j``, copy ``c`` (1-based)."""

    i: int
    j: int
    c: int

    def __str__(self) -> str:
        return f"e({self.i},{self.j},{self.c})"


def mask_of(indices: Iterable[int]) -> int:
    out = 0
    for t in indices:
        out |= 1 << t
    return out


def indices_of(mask: int) -> frozenset[int]:
    out = []
    t = 0
    while mask:
        if mask & 1:
            out.append(t)
        mask >>= 1
        t += 1
    return frozenset(out)


@dataclass(frozen=True)
class KraftModule:
    """A BT1 module with monomial F and V.

    ``fmap[t]`` is the index of ``F(e_t)`` or ``None`` when ``F(e_t) = 0``;
    likewise ``vmap``.
    """

    labels: tuple
    fmap: tuple[int | None, ...]
    vmap: tuple[int | None, ...]
    source: WordMultiset | None = None
    _f_images: tuple[int, ...] = field(init=False, repr=False, compare=False)
    _v_pre: tuple[int, ...] = field(init=False, repr=False, compare=False)
    _v_kernel: int = field(init=False, repr=False, compare=False)

    def __post_init__(self) -> None:
        n = len(self.labels)
        if len(self.fmap) != n or len(self.vmap) != n:
            raise InvalidModule("fmap and vmap must have one entry per basis vector")
        for name, mp in (("F", self.fmap), ("V", self.vmap)):
            targets = [t for t in mp if t is not None]
            if any(not 0 <= t < n for t in targets):
                raise InvalidModule(f"{name} maps outside the basis")
            if len(set(targets)) != len(targets):
                raise InvalidModule(f"{name} is not injective on its support")
        f_images = tuple(0 if t is None else 1 << t for t in self.fmap)
        v_pre = [0] * n
        v_kernel = 0
        for src, t in enumerate(self.vmap):
            if t is None:
                v_kernel |= 1 << src
            else:
                v_pre[t] |= 1 << src
        object.__setattr__(self, "_f_images", f_images)
        object.__setattr__(self, "_v_pre", tuple(v_pre))
        object.__setattr__(self, "_v_kernel", v_kernel)

    @classmethod
    def from_maps(cls, fmap: dict[int, int], vmap: dict[int, int], dim: int,
                  labels: Sequence | None = None) -> KraftModule:
        """Build from sparse dicts ``{source: target}`` on indices ``0..dim-1``."""
        labels = tuple(labels) if labels is not None else tuple(range(dim))
        return cls(labels, tuple(fmap.get(t) for t in range(dim)), tuple(vmap.get(t) for t in range(dim)))

    @classmethod
    def from_word(cls, w: str) -> KraftModule:
        """M(w) on the given representative; basis index ``j`` is ``e_j``."""
        return build_kraft(WordMultiset({w: 1}), representatives=[check_word(w)])

    @property
    def dim(self) -> int:
        return len(self.labels)

    @property
    def full(self) -> int:
        return (1 << self.dim) - 1

    def F(self, mask: int) -> int:
        """Image of a coordinate subspace under F."""
        out = 0
        imgs = self._f_images
        t = 0
        while mask:
            if mask & 1:
                out |= imgs[t]
            mask >>= 1
            t += 1
        return out

    def V_inverse(self, mask: int) -> int:
        """Preimage of a coordinate subspace under V."""
        out = self._v_kernel
        pre = self._v_pre
        t = 0
        while mask:
            if mask & 1:
                out |= pre[t]
            mask >>= 1
            t += 1
        return out

    def kernel_F(self) -> int:
        return mask_of(t for t, x in enumerate(self.fmap) if x is None)

    def kernel_V(self) -> int:
        return self._v_kernel

    def image_F(self) -> int:
        return mask_of(x for x in self.fmap if x is not None)

    def image_V(self) -> int:
        return mask_of(x for x in self.vmap if x is not None)

    def is_bt1(self) -> bool:
        return self.kernel_F() == self.image_V() and self.image_F() == self.kernel_V()

    def permutation_data(self):
        """The partitioned permutation on basis indices: f-tagged where F is nonzero.

        ``e_t`` maps to ``F(e_t)`` when that is nonzero, and otherwise to the
        unique ``e_s`` with ``V(e_s) = e_t``.
        """
        from .permdata import PartitionedPermutation

        if not self.is_bt1():
            raise InvalidModule("not a BT1 module")
        v_inv = {t: s for s, t in enumerate(self.vmap) if t is not None}
        perm = {t: self.fmap[t] if self.fmap[t] is not None else v_inv[t] for t in range(self.dim)}
        f_part = frozenset(t for t in range(self.dim) if self.fmap[t] is not None)
        return PartitionedPermutation(tuple(range(self.dim)), f_part, perm)

    def dump(self) -> str:
        lines = []
        for t, lab in enumerate(self.labels):
            fv = "0" if self.fmap[t] is None else str(self.labels[self.fmap[t]])
            vv = "0" if self.vmap[t] is None else str(self.labels[self.vmap[t]])
            lines.append(f"{lab}: F-> {fv} ; V-> {vv}")
        return "\n".join(lines)


def build_kraft(m: WordMultiset, representatives: Sequence[str] | None = None) -> KraftModule:
    """Direct sum of ``M(w_i)^{m_i}`` with basis ``e(i, j, c)``.

    ``F e(i,j,c) = e(i,j+1,c)`` when ``u_{i,j} = f`` and ``V e(i,j+1,c) = e(i,j,c)``
    when ``u_{i,j} = v``.  By default each word uses its least rotation.
    """
    reps = list(representatives) if representatives is not None else [cw.rep for cw in m]
    if len(reps) != len(m):
        raise ValueError("need one representative per distinct cyclic word")
    labels: list[Label] = []
    fmap: list[int | None] = []
    vmap: list[int | None] = []
    base = 0
    for i, (w, mult) in enumerate(zip(reps, m.values()), start=1):
        n = len(w)
        for c in range(1, mult + 1):
            for j in range(n):
                labels.append(Label(i, j, c))
                fmap.append(None)
                vmap.append(None)
            for j in range(n):
                here = base + j
                nxt = base + (j + 1) % n
                if w[n - 1 - j] == "f":
                    fmap[here] = nxt
                else:
                    vmap[nxt] = here
            base += n
    return KraftModule(tuple(labels), tuple(fmap), tuple(vmap), m)


@dataclass(frozen=True)
class Presentation:
    """Generators ``E_i = e_{I(i)}`` with relations ``F^{m_i} E_{i-1} = V^{n_i} E_i``."""

    word: str
    pairs: tuple[tuple[int, int], ...]
    generator_positions: tuple[int, ...]

    @property
    def rank(self) -> int:
        return len(self.pairs)

    def relation_positions(self) -> tuple[int, ...]:
        """``I'(i-1) = I(i-1) + m_i``: the common value of both sides of relation i."""
        return tuple(self.generator_positions[i - 1] + self.pairs[i - 1][0] for i in range(1, self.rank + 1))

    def __str__(self) -> str:
        rels = ", ".join(
            f"F^{m}E{(i - 1) % self.rank} = V^{n}E{i % self.rank}" for i, (m, n) in enumerate(self.pairs, start=1)
        )
        return f"M({self.word}): {rels}"


def generators_relations(w: str) -> Presentation:
    """Presentation of M(w) for a primitive word using both letters."""
    word = normalize_vf(w)
    pairs = _exp_pairs(word)
    positions = [0]
    for m, n in pairs[:-1]:
        positions.append(positions[-1] + m + n)
    return Presentation(word, tuple(pairs), tuple(positions))
