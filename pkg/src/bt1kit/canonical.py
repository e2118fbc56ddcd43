"""Canonical filtrations and canonical types.

Two independent routes lead from a word multiset to its canonical type:

* :func:`canonical_filtration_oracle` closes ``{0, M}`` under ``N -> F(N)`` and
  ``N -> V^{-1}(N)`` on the explicit Kraft module and reads the type off the
  resulting chain;
* :func:`words_to_canonical` sorts the equal-length powers of all rotations.
"""

from __future__ import annotations

import json
from collections import Counter
from dataclasses import dataclass
from math import lcm

from .errors import ChainNotTotal, InvalidCanonicalType
from .kraft import KraftModule, indices_of
from .permdata import PartitionedPermutation
from .words import WordMultiset, rotate


@dataclass(frozen=True)
class CanonicalType:
    """Data ``(r, s, phi, nu, rho)``; ``phi``, ``nu``, ``rho`` are indexed by ``0..s``.

    The value with ``s = 0`` is the canonical type of the zero module.  It is
    only produced for empty input and is exempt from the ``s > 0`` axiom.
    """

    s: int
    r: int
    phi: tuple[int, ...]
    nu: tuple[int, ...]
    rho: tuple[int, ...]

    def __post_init__(self) -> None:
        for name in ("phi", "nu", "rho"):
            object.__setattr__(self, name, tuple(getattr(self, name)))
            if len(getattr(self, name)) != self.s + 1:
                raise InvalidCanonicalType(f"{name} must have s + 1 = {self.s + 1} entries")

    @classmethod
    def trivial(cls) -> CanonicalType:
        return cls(0, 0, (0,), (0,), (0,))

    @property
    def is_trivial(self) -> bool:
        return self.s == 0

    @property
    def mu(self) -> tuple[int, ...]:
        return tuple(self.rho[i + 1] - self.rho[i] for i in range(self.s))

    @property
    def dim(self) -> int:
        return self.rho[-1]

    def axioms(self) -> dict[int, bool]:
        """Truth value of each of the five defining properties."""
        s, r, phi, nu, rho = self.s, self.r, self.phi, self.nu, self.rho
        rng = range(s)
        ok1 = (
            all(phi[i] <= phi[i + 1] and nu[i] <= nu[i + 1] for i in rng)
            and set(phi) == set(range(r + 1))
            and set(nu) == set(range(r, s + 1))
        )
        ok2 = rho[0] == 0 and all(rho[i] < rho[i + 1] for i in rng)
        ok3 = all((nu[i + 1] > nu[i]) == (phi[i + 1] == phi[i]) for i in rng)
        ok4 = ok1 and ok2 and ok3
        if ok4:
            mu = self.mu
            for i in rng:
                target = nu[i] if nu[i + 1] > nu[i] else phi[i]
                if target >= s or mu[i] != mu[target]:
                    ok4 = False
                    break
        reached = {s}
        frontier = [s]
        while frontier:
            i = frontier.pop()
            for j in (phi[i], nu[i]):
                if 0 <= j <= s and j not in reached:
                    reached.add(j)
                    frontier.append(j)
        ok5 = set(range(1, s + 1)) <= reached
        return {1: ok1, 2: ok2, 3: ok3, 4: ok4, 5: ok5}

    def is_valid(self) -> bool:
        if self.is_trivial:
            return True
        return 0 <= self.r <= self.s and all(self.axioms().values())

    def validate(self) -> CanonicalType:
        if self.is_trivial:
            return self
        if not 0 <= self.r <= self.s:
            raise InvalidCanonicalType(f"need 0 <= r <= s, got r={self.r}, s={self.s}")
        failed = [k for k, ok in self.axioms().items() if not ok]
        if failed:
            raise InvalidCanonicalType(f"fails properties {failed}: {self}")
        return self

    def dual(self) -> CanonicalType:
        return dual_canonical(self)

    def is_self_dual(self) -> bool:
        s = self.s
        return (
            s == 2 * self.r
            and all(self.phi[i] + self.nu[s - i] == s for i in range(s + 1))
            and all(self.rho[i] + self.rho[s - i] == self.rho[s] for i in range(s + 1))
        )

    def to_dict(self) -> dict:
        return {"s": self.s, "r": self.r, "phi": list(self.phi), "nu": list(self.nu), "rho": list(self.rho)}

    def to_json(self) -> str:
        return json.dumps(self.to_dict())

    @classmethod
    def from_json(cls, text: str | dict) -> CanonicalType:
        data = json.loads(text) if isinstance(text, str) else text
        return cls(data["s"], data["r"], data["phi"], data["nu"], data["rho"])

    def __str__(self) -> str:
        return f"s={self.s} r={self.r} phi={list(self.phi)} nu={list(self.nu)} rho={list(self.rho)}"


@dataclass(frozen=True)
class Filtration:
    """Strictly increasing chain of coordinate subspaces, as bitmasks."""

    masks: tuple[int, ...]

    @property
    def steps(self) -> tuple[frozenset[int], ...]:
        return tuple(indices_of(m) for m in self.masks)

    def __len__(self) -> int:
        return len(self.masks)


def canonical_filtration_oracle(M: KraftModule) -> tuple[Filtration, CanonicalType]:
    """Close ``{0, M}`` under F-image and V-preimage and read off the type.

    The collected subspaces must form a chain; anything else is reported as
    :class:`ChainNotTotal` rather than repaired.
    """
    if M.dim == 0:
        return Filtration((0,)), CanonicalType.trivial()
    found = {0, M.full}
    work = [0, M.full]
    limit = 2 * M.dim + 2
    while work:
        N = work.pop()
        for image in (M.F(N), M.V_inverse(N)):
            if image not in found:
                found.add(image)
                work.append(image)
                if len(found) > limit:
                    raise ChainNotTotal(f"more than {limit} subspaces collected")
    chain = sorted(found, key=lambda x: x.bit_count())
    for lo, hi in zip(chain, chain[1:]):
        if lo & ~hi or lo == hi:
            raise ChainNotTotal(f"subspaces {sorted(indices_of(lo))} and {sorted(indices_of(hi))} are not nested")
    where = {N: i for i, N in enumerate(chain)}
    s = len(chain) - 1
    phi = tuple(where[M.F(N)] for N in chain)
    nu = tuple(where[M.V_inverse(N)] for N in chain)
    rho = tuple(N.bit_count() for N in chain)
    ct = CanonicalType(s, phi[s], phi, nu, rho)
    return Filtration(tuple(chain)), ct


def words_to_canonical(m: WordMultiset) -> tuple[CanonicalType, tuple[str, ...]]:
    """Canonical type of ``sum M(w_i)^{m_i}`` and the block words ``omega_0 < ... < omega_{s-1}``.

    Words need not be primitive.
    """
    if not m:
        return CanonicalType.trivial(), ()
    ell = lcm(*(cw.length for cw in m))
    sigma: Counter[str] = Counter()
    for cw, mult in m.items():
        w = cw.rep
        power = ell // len(w)
        for j in range(len(w)):
            sigma[rotate(w, j) * power] += mult
    omega = tuple(sorted(sigma))
    return canonical_from_blocks(omega, [sigma[w] for w in omega]), omega


def canonical_from_blocks(omega: tuple[str, ...], mu: list[int]) -> CanonicalType:
    """Type determined by sorted block words and their multiplicities."""
    s = len(omega)
    ends_f = [w[-1] == "f" for w in omega]
    r = sum(ends_f)
    phi = [0] * (s + 1)
    nu = [r] * (s + 1)
    rho = [0] * (s + 1)
    for t in range(s):
        phi[t + 1] = phi[t] + ends_f[t]
        nu[t + 1] = nu[t] + (not ends_f[t])
        rho[t + 1] = rho[t] + mu[t]
    return CanonicalType(s, r, tuple(phi), tuple(nu), tuple(rho))


@dataclass(frozen=True)
class GammaData:
    """The unexpanded permutation ``Pi`` on ``{0..s-1}`` with its partition."""

    gamma_f: frozenset[int]
    gamma_v: frozenset[int]
    Pi: tuple[int, ...]
    mu: tuple[int, ...]

    def cycles(self) -> list[tuple[int, ...]]:
        seen: set[int] = set()
        out = []
        for i in range(len(self.Pi)):
            if i in seen:
                continue
            cyc = [i]
            j = self.Pi[i]
            while j != i:
                cyc.append(j)
                j = self.Pi[j]
            seen.update(cyc)
            out.append(tuple(cyc))
        return out

    def as_permutation(self) -> PartitionedPermutation:
        n = len(self.Pi)
        return PartitionedPermutation(tuple(range(n)), self.gamma_f, dict(enumerate(self.Pi)))


def gamma_data(ct: CanonicalType) -> GammaData:
    ct.validate()
    s, phi, nu = ct.s, ct.phi, ct.nu
    gamma_f = frozenset(i for i in range(s) if phi[i + 1] > phi[i])
    Pi = tuple(phi[i] if i in gamma_f else nu[i] for i in range(s))
    return GammaData(gamma_f, frozenset(range(s)) - gamma_f, Pi, ct.mu)


def canonical_to_perm(ct: CanonicalType) -> PartitionedPermutation:
    """Expand ``Pi`` by the multiplicities: elements ``(i, j)`` with ``1 <= j <= mu(i)``."""
    if ct.is_trivial:
        return PartitionedPermutation((), frozenset(), {})
    gd = gamma_data(ct)
    elements = tuple((i, j) for i in range(ct.s) for j in range(1, gd.mu[i] + 1))
    perm = {(i, j): (gd.Pi[i], j) for i, j in elements}
    f_part = frozenset(e for e in elements if e[0] in gd.gamma_f)
    return PartitionedPermutation(elements, f_part, perm)


def dual_canonical(ct: CanonicalType) -> CanonicalType:
    s = ct.s
    return CanonicalType(
        s,
        s - ct.r,
        tuple(s - ct.nu[s - i] for i in range(s + 1)),
        tuple(s - ct.phi[s - i] for i in range(s + 1)),
        tuple(ct.rho[s] - ct.rho[s - i] for i in range(s + 1)),
    )


def is_self_dual(m: WordMultiset) -> bool:
    """Self-duality read off the words: the multiset is fixed by complement."""
    return m.is_self_dual()
