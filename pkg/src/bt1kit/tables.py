"""Reference rows for genus 1 to 4: elementary sequence, Kraft multiset, invariants.

Only p-rank zero rows are listed for g = 3, 4; :func:`golden_rows` adds the
positive p-rank rows by prefixing ``{f, v}`` to the rows of genus ``g - 1``.
"""

from __future__ import annotations

from dataclasses import dataclass

from .eo import ElementarySequence
from .words import CyclicWord, WordMultiset, parse_multiset


@dataclass(frozen=True)
class GoldenRow:
    psi: tuple[int, ...]
    words: str
    p_rank: int
    a: int
    s11: int
    u11: int
    derived: bool = False

    @property
    def g(self) -> int:
        return len(self.psi)

    @property
    def es(self) -> ElementarySequence:
        return ElementarySequence(self.psi)

    @property
    def multiset(self) -> WordMultiset:
        return parse_multiset(self.words)


PRINTED = (
    GoldenRow((0,), "fv", 0, 1, 1, 1),
    GoldenRow((1,), "f,v", 1, 0, 0, 0),
    GoldenRow((0, 0), "fv^2", 0, 2, 2, 2),
    GoldenRow((0, 1), "ffvv", 0, 1, 0, 1),
    GoldenRow((1, 1), "f,v,fv", 1, 1, 1, 1),
    GoldenRow((1, 2), "f^2,v^2", 2, 0, 0, 0),
    GoldenRow((0, 0, 0), "fv^3", 0, 3, 3, 3),
    GoldenRow((0, 0, 1), "fv,ffvv", 0, 2, 1, 2),
    GoldenRow((0, 1, 1), "fvv,vff", 0, 2, 0, 0),
    GoldenRow((0, 1, 2), "fffvvv", 0, 1, 0, 1),
    GoldenRow((0, 0, 0, 0), "fv^4", 0, 4, 4, 4),
    GoldenRow((0, 0, 0, 1), "fv^2,ffvv", 0, 3, 2, 3),
    GoldenRow((0, 0, 1, 1), "ffvfvvfv", 0, 3, 0, 1),
    GoldenRow((0, 0, 1, 2), "ffvv^2", 0, 2, 0, 2),
    GoldenRow((0, 1, 1, 1), "fv,ffv,vvf", 0, 3, 1, 1),
    GoldenRow((0, 1, 1, 2), "fv,fffvvv", 0, 2, 1, 2),
    GoldenRow((0, 1, 2, 2), "fffv,fvvv", 0, 2, 0, 0),
    GoldenRow((0, 1, 2, 3), "ffffvvvv", 0, 1, 0, 1),
)

_FV_PAIR = WordMultiset({CyclicWord("f"): 1, CyclicWord("v"): 1})


def prefix_row(row: GoldenRow) -> GoldenRow:
    """Row of ``G + Z/p + mu_p``: one more f and v, p-rank up by one."""
    m = row.multiset + _FV_PAIR
    return GoldenRow(row.es.prefix_ordinary().psi, str(m), row.p_rank + 1, row.a, row.s11, row.u11, True)


def golden_rows(gmax: int = 4) -> list[GoldenRow]:
    """All ``2**g`` rows for each ``g <= gmax`` (``gmax <= 4``), printed or derived."""
    if not 1 <= gmax <= 4:
        raise ValueError("reference rows exist for 1 <= g <= 4")
    by_g: dict[int, list[GoldenRow]] = {}
    for g in range(1, gmax + 1):
        rows = [r for r in PRINTED if r.g == g]
        if g >= 3:
            rows += [prefix_row(r) for r in by_g[g - 1]]
        by_g[g] = sorted(rows, key=lambda r: r.psi)
    return [r for g in sorted(by_g) for r in by_g[g]]
