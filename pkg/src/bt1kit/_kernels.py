"""Hot loops over residues mod d.

Each kernel has a numba version and a pure numpy version with identical
output.  Set ``BT1KIT_NUMBA=0`` to force the numpy path; it is also used when
numba cannot be imported.
"""

from __future__ import annotations

import os

import numpy as np

try:
    import numba
except ImportError:  # pragma: no cover - numba is a declared dependency
    numba = None


def numba_enabled() -> bool:
    return numba is not None and os.environ.get("BT1KIT_NUMBA", "1").strip().lower() not in ("0", "false", "no", "off")


# numpy path ----------------------------------------------------------------

def cycle_decompose_numpy(succ: np.ndarray) -> tuple[np.ndarray, np.ndarray]:
    """Cycles of a permutation given as ``succ[x] = pi(x)``.

    Returns ``(order, starts)``: ``order[starts[k]:starts[k+1]]`` is the k-th
    cycle, beginning at its smallest element and listed along ``pi``.  Cycles
    are sorted by their smallest element.
    """
    succ = np.asarray(succ, dtype=np.int64)
    n = succ.size
    if n == 0:
        return np.empty(0, np.int64), np.zeros(1, np.int64)
    # pointer doubling: smallest element of each cycle
    root = np.arange(n, dtype=np.int64)
    jump = succ.copy()
    span = 1
    while span < n:
        np.minimum(root, root[jump], out=root)
        jump = jump[jump]
        span *= 2
    # list ranking on the cycle cut just before its root
    last = succ == root[succ]
    nxt = np.where(last, np.arange(n), succ)
    rank = (~last).astype(np.int64)
    span = 1
    while span < n:
        rank = rank + rank[nxt]
        nxt = nxt[nxt]
        span *= 2
    size = np.bincount(root, minlength=n)
    pos = size[root] - 1 - rank
    order = np.lexsort((pos, root))
    heads = np.flatnonzero(root == np.arange(n))
    starts = np.concatenate([np.zeros(1, np.int64), np.cumsum(size[heads])])
    return order.astype(np.int64), starts.astype(np.int64)


def count_v_to_f_numpy(p: int, d: int) -> int:
    """``#{a : 2a < d and 2(pa mod d) > d}``."""
    a = np.arange(1, (d + 1) // 2, dtype=np.int64)
    a = a[2 * a < d]
    return int(np.count_nonzero(2 * ((p * a) % d) > d))


# numba path ----------------------------------------------------------------

if numba is not None:

    @numba.njit(cache=True)
    def _cycle_decompose_jit(succ):
        n = succ.size
        order = np.empty(n, np.int64)
        starts = np.empty(n + 1, np.int64)
        seen = np.zeros(n, np.bool_)
        k = 0
        t = 0
        for x in range(n):
            if seen[x]:
                continue
            starts[k] = t
            k += 1
            y = x
            while not seen[y]:
                seen[y] = True
                order[t] = y
                t += 1
                y = succ[y]
        starts[k] = t
        return order, starts[: k + 1].copy()

    @numba.njit(cache=True)
    def _count_v_to_f_jit(p, d):
        count = 0
        a = 1
        while 2 * a < d:
            if 2 * ((p * a) % d) > d:
                count += 1
            a += 1
        return count


def cycle_decompose(succ) -> tuple[np.ndarray, np.ndarray]:
    succ = np.ascontiguousarray(succ, dtype=np.int64)
    if numba_enabled():
        return _cycle_decompose_jit(succ)
    return cycle_decompose_numpy(succ)


def count_v_to_f(p: int, d: int) -> int:
    if numba_enabled():
        return int(_count_v_to_f_jit(np.int64(p), np.int64(d)))
    return count_v_to_f_numpy(p, d)
