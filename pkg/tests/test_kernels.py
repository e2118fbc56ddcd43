import numpy as np
import pytest
from hypothesis import given, settings
from hypothesis import strategies as st

from bt1kit import _kernels, fermat as fm

needs_numba = pytest.mark.skipif(_kernels.numba is None, reason="numba not installed")


def as_lists(order, starts):
    return [order[starts[k] : starts[k + 1]].tolist() for k in range(len(starts) - 1)]


def test_numpy_cycles_small():
    succ = np.array([2, 3, 0, 4, 1])
    assert as_lists(*_kernels.cycle_decompose_numpy(succ)) == [[0, 2], [1, 3, 4]]


def test_env_flag(monkeypatch):
    monkeypatch.setenv("BT1KIT_NUMBA", "0")
    assert not _kernels.numba_enabled()
    monkeypatch.setenv("BT1KIT_NUMBA", "1")
    assert _kernels.numba_enabled() == (_kernels.numba is not None)


@needs_numba
@settings(max_examples=60, deadline=None)
@given(st.permutations(list(range(40))))
def test_cycle_paths_agree_on_permutations(perm):
    succ = np.array(perm, dtype=np.int64)
    a = _kernels._cycle_decompose_jit(succ)
    b = _kernels.cycle_decompose_numpy(succ)
    assert np.array_equal(a[0], b[0]) and np.array_equal(a[1], b[1])


@needs_numba
@settings(max_examples=100, deadline=None)
@given(st.sampled_from([2, 3, 5, 7, 11, 13]), st.integers(1, 3000))
def test_count_paths_agree(p, d):
    assert int(_kernels._count_v_to_f_jit(p, d)) == _kernels.count_v_to_f_numpy(p, d)


def test_fermat_results_independent_of_path(monkeypatch):
    results = []
    for flag in ("1", "0"):
        monkeypatch.setenv("BT1KIT_NUMBA", flag)
        spec = fm.build_spec(3, 61)
        results.append((str(fm.word_multiset(spec)), fm.a_number_bruteforce(3, 61)))
    assert results[0] == results[1]
