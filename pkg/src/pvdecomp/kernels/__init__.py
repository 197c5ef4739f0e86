"""Hot loops of the cube-set algebra.

Two interchangeable backends implement the same two kernels:

``split_against(cubes, box)``
    partition a cube set into the rows disjoint from ``box`` and the slab
    pieces of the rows that meet it;
``dominated_mask(cubes, n_fixed=0)``
    flag the rows contained in another row.

The numba backend is used when numba imports cleanly, unless the
environment variable ``PVDECOMP_DISABLE_NUMBA`` is set to a non-empty value
other than ``0``. The choice is made once, at import time.
"""

import os

import numpy as np

from . import _numpy

INF_CODE = _numpy.INF_CODE


def _numba_requested():
    flag = os.environ.get("PVDECOMP_DISABLE_NUMBA", "")
    return flag in ("", "0")


BACKEND = "numpy"
if _numba_requested():
    try:
        from . import _numba
    except ImportError:  # pragma: no cover - numba is a hard dependency
        _numba = None
    else:
        BACKEND = "numba"

if BACKEND == "numba":
    split_against = _numba.split_against
    dominated_mask = _numba.dominated_mask
else:
    split_against = _numpy.split_against
    dominated_mask = _numpy.dominated_mask


def unique_rows(cubes):
    """Deduplicate and sort a cube array lexicographically on its flattened
    ``(lo1, hi1, lo2, hi2, ...)`` rows."""
    m, n = cubes.shape[0], cubes.shape[1]
    if m == 0:
        return cubes
    flat = np.unique(cubes.reshape(m, 2 * n), axis=0)
    return flat.reshape(-1, n, 2)


def subtract_box(cubes, box):
    """Maximal cubes of ``union(cubes) \\ box``, given the maximal cubes of the
    union. Output is sorted and deduplicated."""
    kept, pieces = split_against(cubes, box)
    if pieces.shape[0] == 0:
        return kept
    pieces = unique_rows(pieces)
    # a piece lies inside its parent, so it never swallows a kept row
    cand = np.concatenate([kept, pieces], axis=0)
    drop = dominated_mask(cand, kept.shape[0])
    return unique_rows(cand[~drop])
