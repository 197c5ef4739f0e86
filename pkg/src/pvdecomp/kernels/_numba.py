"""numba versions of the cube-set kernels (same contracts as ``_numpy``)."""

import numpy as np
from numba import njit

INF_CODE = np.iinfo(np.int64).max


@njit(cache=True, nogil=True)
def _inside(cubes, j, i):
    n = cubes.shape[1]
    for k in range(n):
        if cubes[i, k, 0] > cubes[j, k, 0] or cubes[j, k, 1] > cubes[i, k, 1]:
            return False
    return True


@njit(cache=True, nogil=True)
def dominated_mask(cubes, n_fixed=0):
    m = cubes.shape[0]
    out = np.zeros(m, dtype=np.bool_)
    for j in range(n_fixed, m):
        for i in range(m):
            if i != j and _inside(cubes, j, i):
                out[j] = True
                break
    return out


@njit(cache=True, nogil=True)
def _split(cubes, box):
    m, n = cubes.shape[0], cubes.shape[1]
    meets = np.ones(m, dtype=np.bool_)
    n_kept = 0
    for r in range(m):
        for k in range(n):
            if cubes[r, k, 0] >= box[k, 1] or box[k, 0] >= cubes[r, k, 1]:
                meets[r] = False
                break
        if not meets[r]:
            n_kept += 1
    kept = np.empty((n_kept, n, 2), dtype=np.int64)
    pieces = np.empty(((m - n_kept) * 2 * n, n, 2), dtype=np.int64)
    q = 0
    p = 0
    for r in range(m):
        if not meets[r]:
            kept[q] = cubes[r]
            q += 1
            continue
        for k in range(n):
            a = box[k, 0]
            b = box[k, 1]
            if cubes[r, k, 0] < a:
                pieces[p] = cubes[r]
                pieces[p, k, 1] = min(cubes[r, k, 1], a)
                p += 1
            if b != INF_CODE and b < cubes[r, k, 1]:
                pieces[p] = cubes[r]
                pieces[p, k, 0] = max(cubes[r, k, 0], b)
                p += 1
    return kept, pieces[:p]


def split_against(cubes, box):
    return _split(np.ascontiguousarray(cubes), np.ascontiguousarray(box))
