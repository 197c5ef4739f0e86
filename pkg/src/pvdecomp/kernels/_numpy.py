"""Pure-numpy cube-set kernels.

Cube sets are ``(m, n, 2)`` int64 arrays of half-open ``[lo, hi[`` bounds,
with ``INF_CODE`` standing for an unbounded upper end.
"""

import numpy as np

INF_CODE = np.iinfo(np.int64).max

# rows compared per block when testing pairwise containment
_BLOCK = 512


def dominated_mask(cubes, n_fixed=0):
    """Mark rows that are contained in some other row.

    Rows must be distinct. The first ``n_fixed`` rows are known not to be
    dominated by anything in the set and are skipped as candidates (they
    still act as dominators).
    """
    m = cubes.shape[0]
    out = np.zeros(m, dtype=np.bool_)
    if m <= 1 or n_fixed >= m:
        return out
    lo = cubes[:, :, 0]
    hi = cubes[:, :, 1]
    for start in range(n_fixed, m, _BLOCK):
        stop = min(start + _BLOCK, m)
        # inner[j] inside outer[i]: lo_i <= lo_j and hi_j <= hi_i everywhere
        inside = np.all(
            (lo[None, :, :] <= lo[start:stop, None, :])
            & (hi[start:stop, None, :] <= hi[None, :, :]),
            axis=2,
        )
        inside[np.arange(stop - start), np.arange(start, stop)] = False
        out[start:stop] = inside.any(axis=1)
    return out


def split_against(cubes, box):
    """Return ``(kept, pieces)``: rows disjoint from ``box`` unchanged, and the
    non-empty slab pieces of the rows that meet it."""
    n = cubes.shape[1]
    lo = cubes[:, :, 0]
    hi = cubes[:, :, 1]
    a = box[:, 0]
    b = box[:, 1]
    meets = np.all((lo < b) & (a < hi), axis=1)
    kept = cubes[~meets]
    hit = cubes[meets]
    if hit.shape[0] == 0:
        return kept, hit
    pieces = []
    for i in range(n):
        below = hit[hit[:, i, 0] < a[i]].copy()
        below[:, i, 1] = np.minimum(below[:, i, 1], a[i])
        pieces.append(below)
        if b[i] != INF_CODE:
            above = hit[b[i] < hit[:, i, 1]].copy()
            above[:, i, 0] = np.maximum(above[:, i, 0], b[i])
            pieces.append(above)
    return kept, np.concatenate(pieces, axis=0)
