"""Elementary sequences and their run-length notation."""

from __future__ import annotations

import json
import re
from bisect import bisect_left
from collections.abc import Iterable, Sequence
from dataclasses import dataclass

from .canonical import CanonicalType
from .errors import InvalidElementarySequence, NotSelfDual, ParseError

UP, FLAT = "up", "flat"
_ASCII = {"u": UP, "c": FLAT}
_ARROWS = {"↗": UP, "→": FLAT}
_SUP = str.maketrans("0123456789", "⁰¹²³⁴⁵⁶⁷⁸⁹")
_UNSUP = str.maketrans("⁰¹²³⁴⁵⁶⁷⁸⁹", "0123456789")
_ASCII_TERM = re.compile(r"^([uc])(\d+)$")
_ARROW_TERM = re.compile(r"([↗→])\^?([0-9⁰¹²³⁴⁵⁶⁷⁸⁹]+)")


@dataclass(frozen=True)
class ElementarySequence:
    """``[psi_1, ..., psi_g]`` with ``psi_0 = 0`` and steps of 0 or 1."""

    psi: tuple[int, ...]

    def __post_init__(self) -> None:
        psi = tuple(int(x) for x in self.psi)
        object.__setattr__(self, "psi", psi)
        prev = 0
        for i, x in enumerate(psi, start=1):
            if x not in (prev, prev + 1):
                raise InvalidElementarySequence(f"psi_{i}={x} after psi_{i - 1}={prev}")
            prev = x

    @property
    def g(self) -> int:
        return len(self.psi)

    def __len__(self) -> int:
        return len(self.psi)

    def __getitem__(self, i: int) -> int:
        """1-based access with ``psi_0 = 0``."""
        if i == 0:
            return 0
        if not 1 <= i <= self.g:
            raise IndexError(i)
        return self.psi[i - 1]

    @property
    def p_rank(self) -> int:
        return max((i for i in range(self.g + 1) if self[i] == i), default=0)

    @property
    def a_number(self) -> int:
        return self.g - self[self.g]

    def rle(self) -> RunLengthEO:
        return RunLengthEO.from_psi(self.psi)

    def prefix_ordinary(self) -> ElementarySequence:
        """Sequence after adding one copy of ``{f, v}``."""
        return ElementarySequence((1,) + tuple(x + 1 for x in self.psi))

    def to_dict(self) -> dict:
        return {"g": self.g, "psi": list(self.psi), "rle": self.rle().ascii()}

    def to_json(self) -> str:
        return json.dumps(self.to_dict())

    @classmethod
    def from_json(cls, text: str | dict) -> ElementarySequence:
        data = json.loads(text) if isinstance(text, str) else text
        es = cls(tuple(data["psi"]))
        if "g" in data and data["g"] != es.g:
            raise InvalidElementarySequence("g does not match the length of psi")
        if "rle" in data and RunLengthEO.parse(data["rle"]).expand() != es:
            raise InvalidElementarySequence("rle does not match psi")
        return es

    @classmethod
    def all(cls, g: int) -> Iterable[ElementarySequence]:
        """All ``2**g`` sequences of length ``g``."""
        for bits in range(1 << g):
            steps = [(bits >> (g - 1 - i)) & 1 for i in range(g)]
            psi, acc = [], 0
            for st in steps:
                acc += st
                psi.append(acc)
            yield cls(tuple(psi))

    def __str__(self) -> str:
        return "[" + ",".join(map(str, self.psi)) + "]"


@dataclass(frozen=True)
class RunLengthEO:
    """Runs ``(direction, length)``; directions are ``"up"`` and ``"flat"``."""

    runs: tuple[tuple[str, int], ...]

    def __post_init__(self) -> None:
        runs = tuple((d, int(n)) for d, n in self.runs)
        for d, n in runs:
            if d not in (UP, FLAT) or n < 0:
                raise ParseError(f"bad run ({d!r}, {n})")
        object.__setattr__(self, "runs", runs)

    @classmethod
    def from_psi(cls, psi: Sequence[int]) -> RunLengthEO:
        runs: list[tuple[str, int]] = []
        prev = 0
        for x in psi:
            d = UP if x > prev else FLAT
            prev = x
            if runs and runs[-1][0] == d:
                runs[-1] = (d, runs[-1][1] + 1)
            else:
                runs.append((d, 1))
        return cls(tuple(runs))

    @classmethod
    def parse(cls, text: str) -> RunLengthEO:
        """Read ``"u3,c2"`` or the arrow form ``"[↗³→²]"``; empty text is ``[]``."""
        body = text.strip().removeprefix("[").removesuffix("]").strip()
        if not body:
            return cls(())
        if body[0] in _ARROWS:
            pos, runs = 0, []
            compact = body.replace(" ", "")
            for match in _ARROW_TERM.finditer(compact):
                if match.start() != pos:
                    break
                runs.append((_ARROWS[match.group(1)], int(match.group(2).translate(_UNSUP))))
                pos = match.end()
            if pos != len(compact):
                raise ParseError(f"malformed run-length string {text!r}")
            return cls(tuple(runs))
        runs = []
        for term in body.split(","):
            match = _ASCII_TERM.match(term.strip())
            if not match:
                raise ParseError(f"malformed run {term.strip()!r} in {text!r}")
            runs.append((_ASCII[match.group(1)], int(match.group(2))))
        return cls(tuple(runs))

    def normalize(self) -> RunLengthEO:
        """Drop empty runs and merge neighbours with the same direction."""
        out: list[tuple[str, int]] = []
        for d, n in self.runs:
            if n == 0:
                continue
            if out and out[-1][0] == d:
                out[-1] = (d, out[-1][1] + n)
            else:
                out.append((d, n))
        return RunLengthEO(tuple(out))

    def expand(self) -> ElementarySequence:
        psi, acc = [], 0
        for d, n in self.runs:
            for _ in range(n):
                acc += d == UP
                psi.append(acc)
        return ElementarySequence(tuple(psi))

    @property
    def g(self) -> int:
        return sum(n for _, n in self.runs)

    def ascii(self) -> str:
        return ",".join(f"{'u' if d == UP else 'c'}{n}" for d, n in self.normalize().runs)

    def unicode(self) -> str:
        inner = "".join(f"{'↗' if d == UP else '→'}{str(n).translate(_SUP)}" for d, n in self.normalize().runs)
        return f"[{inner}]"

    def __eq__(self, other: object) -> bool:
        if isinstance(other, RunLengthEO):
            return self.normalize().runs == other.normalize().runs
        return NotImplemented

    def __hash__(self) -> int:
        return hash(self.normalize().runs)

    def __str__(self) -> str:
        return self.ascii()


def es_from_canonical(ct: CanonicalType) -> ElementarySequence:
    """Walk the first ``r`` blocks: block ``i`` adds ``mu(i-1)`` steps, rising iff phi does."""
    if ct.is_trivial:
        return ElementarySequence(())
    if not ct.is_self_dual():
        raise NotSelfDual(f"canonical type is not self-dual: {ct}")
    psi, acc = [], 0
    for i in range(1, ct.r + 1):
        rising = ct.phi[i] > ct.phi[i - 1]
        for _ in range(ct.rho[i] - ct.rho[i - 1]):
            acc += rising
            psi.append(acc)
    return ElementarySequence(tuple(psi))


def final_sequence(es: ElementarySequence) -> tuple[int, ...]:
    """``psi`` extended to ``0..2g`` by ``psi(2g - i) = psi(i) + g - i``."""
    g = es.g
    ext = [es[i] for i in range(g + 1)]
    ext += [ext[2 * g - k] + k - g for k in range(g + 1, 2 * g + 1)]
    return tuple(ext)


def canonical_from_es(es: ElementarySequence) -> CanonicalType:
    """The self-dual canonical type with the given elementary sequence.

    The steps of the filtration are the dimensions reachable from ``0`` and
    ``2g`` under ``i -> psi(i)`` (the F-image) and ``i -> g + i - psi(i)``
    (the V-preimage) on the final sequence.
    """
    g = es.g
    if g == 0:
        return CanonicalType.trivial()
    fin = final_sequence(es)
    seen = {0, 2 * g}
    work = [0, 2 * g]
    while work:
        i = work.pop()
        for j in (fin[i], g + i - fin[i]):
            if j not in seen:
                seen.add(j)
                work.append(j)
    chain = sorted(seen)
    s = len(chain) - 1
    phi = tuple(bisect_left(chain, fin[c]) for c in chain)
    nu = tuple(bisect_left(chain, g + c - fin[c]) for c in chain)
    return CanonicalType(s, bisect_left(chain, g), phi, nu, tuple(chain))
