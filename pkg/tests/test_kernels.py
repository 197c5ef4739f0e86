import numpy as np
import pytest
from hypothesis import given, settings
from hypothesis import strategies as st

from pvdecomp import kernels
from pvdecomp.kernels import _numba, _numpy

INF = kernels.INF_CODE


def _arr(rows):
    return np.array(rows, dtype=np.int64).reshape(len(rows), -1, 2)


@st.composite
def cube_arrays(draw, max_rows=12):
    n = draw(st.integers(1, 3))
    m = draw(st.integers(0, max_rows))
    rows = []
    for _ in range(m):
        row = []
        for _ in range(n):
            lo = draw(st.integers(0, 4))
            hi = draw(st.one_of(st.integers(lo + 1, 5), st.just(INF)))
            row.append((lo, hi))
        rows.append(row)
    arr = np.array(rows, dtype=np.int64).reshape(m, n, 2)
    return kernels.unique_rows(arr)


def test_backend_flag_is_reported():
    assert kernels.BACKEND in ("numba", "numpy")


def test_dominated_mask_simple():
    arr = _arr([[(0, 5), (0, 5)], [(1, 2), (1, 2)], [(4, INF), (0, 1)]])
    for impl in (_numpy, _numba):
        assert impl.dominated_mask(arr).tolist() == [False, True, False]
        # row 0 declared safe, row 1 still checked
        assert impl.dominated_mask(arr, 1).tolist() == [False, True, False]


def test_split_against_disjoint_rows_are_kept():
    arr = _arr([[(0, 1), (0, INF)], [(0, INF), (0, INF)]])
    box = np.array([(1, 2), (1, 2)], dtype=np.int64)
    for impl in (_numpy, _numba):
        kept, pieces = impl.split_against(arr, box)
        assert kept.tolist() == arr[:1].tolist()
        got = sorted(map(str, pieces.tolist()))
        want = sorted(map(str, [
            [[0, 1], [0, INF]], [[2, INF], [0, INF]],
            [[0, INF], [0, 1]], [[0, INF], [2, INF]],
        ]))
        assert got == want


@given(cube_arrays())
@settings(max_examples=150, deadline=None)
def test_backends_agree_on_dominated_mask(arr):
    assert _numpy.dominated_mask(arr).tolist() == _numba.dominated_mask(arr).tolist()


@given(cube_arrays(), cube_arrays(max_rows=1))
@settings(max_examples=150, deadline=None)
def test_backends_agree_on_split(arr, boxes):
    if boxes.shape[0] == 0 or boxes.shape[1] != arr.shape[1]:
        return
    box = boxes[0]
    k1, p1 = _numpy.split_against(arr, box)
    k2, p2 = _numba.split_against(arr, box)
    assert k1.tolist() == k2.tolist()
    assert kernels.unique_rows(p1).tolist() == kernels.unique_rows(p2).tolist()


def test_unique_rows_sorts_inf_last():
    arr = _arr([[(0, INF)], [(0, 1)], [(0, 1)]])
    assert kernels.unique_rows(arr).tolist() == [[[0, 1]], [[0, INF]]]


@pytest.mark.parametrize("impl", [_numpy, _numba])
def test_dominated_mask_matches_brute_force(impl):
    rng = np.random.default_rng(3)
    lo = rng.integers(0, 4, size=(60, 3))
    arr = kernels.unique_rows(np.stack([lo, lo + rng.integers(1, 4, size=lo.shape)], -1))
    m = arr.shape[0]
    want = [
        any(i != j and np.all(arr[i, :, 0] <= arr[j, :, 0]) and np.all(arr[j, :, 1] <= arr[i, :, 1])
            for i in range(m))
        for j in range(m)
    ]
    assert impl.dominated_mask(arr).tolist() == want
