"""Compare the numba and numpy kernels.

    python3 benchmarks/bench_kernels.py [--sizes 1000,100000,1000000] [--repeat 5]

The permutation used is ``a -> p a mod d``, the one the library decomposes.
"""

from __future__ import annotations

import argparse
import time

import numpy as np

from bt1kit import _kernels


def best_of(fn, repeat: int) -> float:
    times = []
    for _ in range(repeat):
        t0 = time.perf_counter()
        fn()
        times.append(time.perf_counter() - t0)
    return min(times)


def main() -> None:
    parser = argparse.ArgumentParser(description=__doc__.splitlines()[0])
    parser.add_argument("--sizes", default="1001,100001,1000001")
    parser.add_argument("--p", type=int, default=3)
    parser.add_argument("--repeat", type=int, default=5)
    args = parser.parse_args()
    if _kernels.numba is None:
        raise SystemExit("numba is not installed; nothing to compare")

    sizes = [int(s) for s in args.sizes.split(",")]
    p = args.p
    # warm up the jit cache
    _kernels._cycle_decompose_jit(np.arange(4, dtype=np.int64))
    _kernels._count_v_to_f_jit(np.int64(3), np.int64(8))

    print(f"{'kernel':<16} {'d':>9} {'numba ms':>10} {'numpy ms':>10} {'ratio':>7}")
    for d in sizes:
        if d % p == 0:
            d += 1
        succ = (p * np.arange(d, dtype=np.int64)) % d
        o1, s1 = _kernels._cycle_decompose_jit(succ)
        o2, s2 = _kernels.cycle_decompose_numpy(succ)
        assert np.array_equal(o1, o2) and np.array_equal(s1, s2)
        assert int(_kernels._count_v_to_f_jit(p, d)) == _kernels.count_v_to_f_numpy(p, d)

        rows = [
            ("cycles", lambda: _kernels._cycle_decompose_jit(succ), lambda: _kernels.cycle_decompose_numpy(succ)),
            ("count_v_to_f", lambda: _kernels._count_v_to_f_jit(np.int64(p), np.int64(d)),
             lambda: _kernels.count_v_to_f_numpy(p, d)),
        ]
        for name, fast, slow in rows:
            tj = best_of(fast, args.repeat) * 1e3
            tn = best_of(slow, args.repeat) * 1e3
            print(f"{name:<16} {d:>9} {tj:>10.3f} {tn:>10.3f} {tn / tj if tj else float('nan'):>7.1f}")
    print(f"best of {args.repeat} runs")


if __name__ == "__main__":
    main()
