"""Closed formulas for special families of d.

Encompassing case: ``d = p**ell - 1``.  Hermitian case: ``d = p**lam + 1``.
Characteristic two: ``p = 2`` and ``d`` odd.  Everything is exact integer
arithmetic, so large exponents are fine.
"""

from __future__ import annotations

from collections import Counter
from itertools import product

from ..eo import FLAT, UP, ElementarySequence, RunLengthEO
from ..errors import NotCoprime, RationalCurve, UseP2Module
from ..invariants import InvariantBundle, invariants
from ..words import break_count_k, complement, index_word
from .core import FORWARD, build_spec, word_multiset


def _halves(p: int) -> tuple[int, int]:
    """``((p + 1) / 2, (p - 1) / 2)``."""
    return (p + 1) // 2, (p - 1) // 2


def _require_odd(p: int) -> None:
    if p == 2:
        raise UseP2Module("use the p = 2 formulas")
    if p % 2 == 0:
        raise ValueError(f"p={p} must be an odd prime")


def _block_count(t: str) -> int:
    return 1 + sum(t[i] != t[i + 1] for i in range(len(t) - 1))


def _cyclic_breaks(w: str) -> int:
    n = len(w)
    return sum(w[i] != w[(i + 1) % n] for i in range(n)) if n > 1 else 0


# a-number -------------------------------------------------------------------

def a_number_closed(p: int, d: int) -> int:
    """Floor-sum formula for the a-number of y^d = x(1 - x)."""
    _require_odd(p)
    if d % p == 0:
        raise NotCoprime(f"p={p} divides d={d}")
    if d <= 2:
        raise RationalCurve(f"d={d} gives a rational curve")
    return sum((2 * j * d) // (2 * p) - ((2 * j - 1) * d) // (2 * p) for j in range(1, (p - 1) // 2 + 1))


def a_number_special(p: int, d: int) -> int | None:
    """Value for ``d = +-1`` or ``p +- 1`` mod ``2p``; None otherwise."""
    _require_odd(p)
    r = d % (2 * p)
    if r == 1:
        num = (p - 1) * (d - 1)
    elif r == 2 * p - 1:
        num = (p - 1) * (d + 1)
    elif r == p + 1:
        num = (p - 1) * (d + p - 1)
    elif r == p - 1:
        num = (p - 1) * (d - p + 1)
    else:
        return None
    return num // (4 * p)


def a_number_deviation(p: int, d: int) -> tuple[float, float]:
    """``(|a - (p-1)d/4p|, (p-1)^2/4p)``; the first has been observed not to exceed the second."""
    a = a_number_closed(p, d)
    return abs(a - (p - 1) * d / (4 * p)), (p - 1) ** 2 / (4 * p)


def is_ordinary(p: int, d: int) -> bool:
    if d <= 2:
        raise RationalCurve(f"d={d} gives a rational curve")
    return (p - 1) % d == 0


def is_superspecial(p: int, d: int) -> bool:
    if d <= 2:
        raise RationalCurve(f"d={d} gives a rational curve")
    return (p + 1) % d == 0


# encompassing case ----------------------------------------------------------

def encompassing_multiplicity(p: int, ell: int, w: str) -> int:
    """``mu(w)`` for a length-ell pattern when ``d = p**ell - 1``."""
    _require_odd(p)
    hi, lo = _halves(p)
    k = _cyclic_breaks(w)
    if k == 0:
        return hi**ell - 2
    return lo**k * hi ** (ell - k)


def encompassing_suffix_multiplicity(p: int, ell: int, t: str) -> int:
    """``mu(---t)``: patterns ending in ``t``, for ``1 <= len(t) <= ell``."""
    _require_odd(p)
    hi, lo = _halves(p)
    L = len(t)
    B = _block_count(t)
    sign = 1 if B % 2 else -1
    value = hi ** (L - B) * lo ** (B - 1) * (p ** (ell + 1 - L) + sign) // 2
    return value - 2 if B == 1 else value


def encompassing_table(p: int, ell: int) -> Counter[str]:
    """All length-ell pattern multiplicities from the closed form (2**ell words)."""
    return Counter({w: m for w in map("".join, product("fv", repeat=ell))
                    if (m := encompassing_multiplicity(p, ell, w))})


def encompassing_digit_pattern(digits: tuple[int, ...], p: int) -> str:
    """Pattern of ``a = sum digits[j] p**j`` read from its base-p digits."""
    ell = len(digits)
    h = (p - 1) // 2
    letters = []
    for j in range(ell):
        # u_j looks at digits from position ell-1-j downward, wrapping around
        for step in range(ell):
            x = digits[(ell - 1 - j - step) % ell]
            if x != h:
                letters.append("f" if x > h else "v")
                break
    return "".join(reversed(letters))


def encompassing_digit_table(p: int, ell: int) -> Counter[str]:
    """Count patterns over all admissible digit tuples."""
    h = (p - 1) // 2
    skip = {(0,) * ell, (p - 1,) * ell, (h,) * ell}
    return Counter(
        encompassing_digit_pattern(ds, p) for ds in product(range(p), repeat=ell) if ds not in skip
    )


def encompassing_mu(p: int, ell: int) -> list[int]:
    """The run lengths ``mu_0, ..., mu_{2**(ell-1) - 1}``."""
    _require_odd(p)
    hi, lo = _halves(p)
    out = [hi**ell - 2]
    for i in range(1, 1 << (ell - 1)):
        k = break_count_k(i)
        out.append(lo**k * hi ** (ell - k) if i % 2 == 0 else lo ** (k + 1) * hi ** (ell - k - 1))
    return out


def encompassing_eo(p: int, ell: int) -> RunLengthEO:
    _require_odd(p)
    if ell < 1 or p**ell - 1 <= 2:
        raise RationalCurve(f"d = {p}^{ell} - 1 gives a rational curve")
    runs = [(UP if i % 2 == 0 else FLAT, m) for i, m in enumerate(encompassing_mu(p, ell))]
    return RunLengthEO(tuple(runs)).normalize()


def encompassing_invariants(p: int, ell: int) -> InvariantBundle:
    """Closed-form invariants.  The s11 term is ``((p-1)/2)**ell`` for even ell."""
    _require_odd(p)
    hi, lo = _halves(p)
    g = (p**ell - 2) // 2
    f = hi**ell - 2
    a = lo * (p ** (ell - 1) - 1) // 2
    s = lo**ell if ell % 2 == 0 else 0
    u = s + sum(hi**2 * lo ** (2 * j + 1) * (p ** (ell - 3 - 2 * j) - 1) // 2 for j in range((ell - 4) // 2 + 1))
    return InvariantBundle(g, f, a, s, u)


def encompassing_invariants_from_suffixes(p: int, ell: int) -> InvariantBundle:
    """Invariants assembled from the suffix-multiplicity formulas."""
    mu = lambda t: encompassing_suffix_multiplicity(p, ell, t) if len(t) <= ell else 0  # noqa: E731
    g = (p**ell - 2) // 2
    f = mu("f" * ell)
    a = mu("fv")
    s = encompassing_multiplicity(p, ell, "fv" * (ell // 2)) if ell % 2 == 0 else 0
    u = s + sum(mu("vv" + "fv" * j + "ff") for j in range((ell - 4) // 2 + 1)) if ell >= 4 else s
    return InvariantBundle(g, f, a, s, u)


# Hermitian case -------------------------------------------------------------

def half_pattern(p: int, lam: int, b: int) -> str:
    """``pat'(b)``: the first ``lam`` letters of the orbit of ``b`` mod ``p**lam + 1``."""
    d = p**lam + 1
    letters = []
    x = b
    for _ in range(lam):
        letters.append("f" if 2 * x > d else "v")
        x = x * p % d
    return "".join(reversed(letters))


def hermitian_half_multiplicity(p: int, lam: int, w: str) -> int:
    """``mu'(w)`` for a half pattern of length ``lam``."""
    _require_odd(p)
    hi, lo = _halves(p)
    k = _block_count(w)
    if k % 2:
        return hi ** (lam - k) * lo**k
    return hi ** (lam + 1 - k) * lo ** (k - 1)


def hermitian_half_suffix(p: int, lam: int, t: str) -> int:
    """``mu'(---t)`` for ``1 <= len(t) <= lam``."""
    _require_odd(p)
    hi, lo = _halves(p)
    L = len(t)
    k = _block_count(t)
    sign = -1 if k % 2 else 1
    return hi ** (L - k) * lo ** (k - 1) * (p ** (lam + 1 - L) + sign) // 2


def hermitian_half_table(p: int, lam: int) -> Counter[str]:
    return Counter({w: hermitian_half_multiplicity(p, lam, w) for w in map("".join, product("fv", repeat=lam))})


def hermitian_table(p: int, lam: int) -> Counter[str]:
    """Full length-``2 lam`` patterns: ``complement(w') + w'``."""
    return Counter({complement(w) + w: m for w, m in hermitian_half_table(p, lam).items() if m})


def hermitian_digit_table(p: int, lam: int) -> Counter[str]:
    """Half patterns counted over digit tuples ``(b_1, ..., b_lam)``."""
    h = (p - 1) // 2

    def letter(ds: tuple[int, ...]) -> str:
        for x in reversed(ds):
            if x != h:
                return "f" if x > h else "v"
        raise AssertionError("excluded tuple")

    out: Counter[str] = Counter()
    for ds in product(range(p), repeat=lam):
        if all(x == h for x in ds):
            continue
        letters = []
        cur = ds
        for _ in range(lam):
            letters.append(letter(cur))
            cur = (p - 1 - cur[-1],) + cur[:-1]
        out["".join(reversed(letters))] += 1
    return out


def hermitian_mu(p: int, lam: int) -> list[int]:
    _require_odd(p)
    hi, lo = _halves(p)
    out = []
    for i in range(1 << (lam - 1)):
        k = break_count_k(i)
        out.append(hi ** (lam - k - 1) * lo ** (k + 1) if i % 2 == 0 else hi ** (lam - k) * lo**k)
    return out


def hermitian_eo(p: int, lam: int) -> RunLengthEO:
    _require_odd(p)
    if lam < 1:
        raise RationalCurve("lambda must be positive")
    runs = [(FLAT if i % 2 == 0 else UP, m) for i, m in enumerate(hermitian_mu(p, lam))]
    return RunLengthEO(tuple(runs)).normalize()


def hermitian_invariants(p: int, lam: int) -> InvariantBundle:
    _require_odd(p)
    hi, lo = _halves(p)
    g = p**lam // 2
    a = (p - 1) * (p ** (lam - 1) + 1) // 4
    s = lo**lam if lam % 2 else 0
    u = s + sum(hi**2 * lo ** (2 * j + 1) * (p ** (lam - 3 - 2 * j) + 1) // 2 for j in range((lam - 4) // 2 + 1))
    if lam > 1:
        u += hi**2 * lo ** (lam - 2) if lam % 2 else hi * lo ** (lam - 1)
    return InvariantBundle(g, 0, a, s, u)


def hermitian_word(i: int, lam: int) -> str:
    """The i-th f-initial word of length ``2 lam`` carrying ``mu'_i``."""
    w = index_word(i, lam)
    return w + complement(w)


# characteristic two ---------------------------------------------------------

def p2_es(d: int) -> ElementarySequence:
    if d % 2 == 0:
        raise NotCoprime(f"p=2 divides d={d}")
    if d <= 1:
        raise RationalCurve(f"d={d} gives a rational curve")
    g = (d - 1) // 2
    return ElementarySequence(tuple(i // 2 for i in range(1, g + 1)))


def p2_closed_invariants(d: int) -> tuple[int, int, int]:
    """``(p_rank, a, s11)`` for p = 2."""
    p2_es(d)
    a = (d - 1) // 4 if d % 4 == 1 else (d + 1) // 4
    return 0, a, int(d % 3 == 0)


def p2_eo(d: int, orientation: str = FORWARD) -> tuple[RunLengthEO, InvariantBundle]:
    """Closed-form EO and invariants; u11 comes from the word multiset."""
    es = p2_es(d)
    f, a, s = p2_closed_invariants(d)
    u = invariants(word_multiset(build_spec(2, d, orientation=orientation))).u11 if es.g else 0
    return es.rle(), InvariantBundle(es.g, f, a, s, u)
