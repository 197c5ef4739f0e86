"""Brute-force reference model on an integer grid.

With every endpoint an integer, a region of ``[0, inf[^n`` is decided by the
cells ``{0..L}^n``: cell ``k < L`` stands for ``[k, k+1[`` and cell ``L`` for
``[L, inf[``. This is exact once ``L`` exceeds every finite endpoint. Nothing
here calls the slab-splitting code in :mod:`pvdecomp.geometry`; the oracle is
meant to check it.

Cost grows like ``(L+1)^n`` cells and ``((L+1)(L+2)/2)^n`` candidate boxes.
"""

from __future__ import annotations

from dataclasses import dataclass
from itertools import combinations, permutations, product
from typing import Iterable, Sequence

import numpy as np

from .geometry import INF, Area, Cube, Interval
from .pv import Process, Program


@dataclass(frozen=True, eq=False)
class GridRegion:
    dimension: int
    bound: int
    membership: np.ndarray  # bool, shape (bound + 1,) * dimension

    def __eq__(self, other) -> bool:
        if not isinstance(other, GridRegion):
            return NotImplemented
        if self.dimension != other.dimension:
            return False
        L = max(self.bound, other.bound)
        return bool(np.array_equal(regrid(self, L).membership, regrid(other, L).membership))

    def count(self) -> int:
        return int(self.membership.sum())


def _cube_endpoint(cubes: Iterable[Sequence[Interval]]) -> int:
    best = 0
    for c in cubes:
        for iv in c:
            best = max(best, iv.lo, 0 if iv.hi == INF else iv.hi)
    return best


def _paint(shape, cubes, L) -> np.ndarray:
    grid = np.zeros(shape, dtype=bool)
    for c in cubes:
        grid[tuple(slice(iv.lo, L + 1 if iv.hi == INF else iv.hi) for iv in c)] = True
    return grid


def _resolve_bound(bound, needed):
    if bound is None:
        return needed + 1
    if bound < needed + 1:
        raise ValueError(f"bound {bound} is not faithful; need at least {needed + 1}")
    return bound


def grid_of_area(x: Area, bound: int | None = None) -> GridRegion:
    L = _resolve_bound(bound, _cube_endpoint(x.cubes))
    return GridRegion(x.dimension, L, _paint((L + 1,) * x.dimension, x.cubes, L))


def grid_of_complement(dimension: int, forbidden: Sequence, bound: int | None = None) -> GridRegion:
    forbidden = [c if isinstance(c, Cube) else Cube(c) for c in forbidden]
    L = _resolve_bound(bound, _cube_endpoint(forbidden))
    return GridRegion(dimension, L, ~_paint((L + 1,) * dimension, forbidden, L))


def holds_at(process: Process, position: int) -> set[str]:
    """Semaphores held after running instructions ``1..position`` one by one.

    A P on a held semaphore or a V on a free one does nothing.
    """
    held: set[str] = set()
    for ins in process.body[:position]:
        if ins.kind == "P":
            held.add(ins.semaphore)
        else:
            held.discard(ins.semaphore)
    return held


def grid_of_program(program: Program, bound: int | None = None) -> GridRegion:
    """State space by direct simulation: a cell is excluded when some
    semaphore is held by at least its arity many processes there."""
    n = program.n
    longest = max((len(p) for p in program.processes), default=0)
    L = _resolve_bound(bound, longest)
    member = np.ones((L + 1,) * n, dtype=bool)
    for s, arity in program.env.items():
        count = np.zeros((L + 1,) * n, dtype=np.int64)
        for i, p in enumerate(program.processes):
            held = np.array([s in holds_at(p, k) for k in range(L + 1)], dtype=np.int64)
            shape = [1] * n
            shape[i] = L + 1
            count = count + held.reshape(shape)
        member &= count < arity
    return GridRegion(n, L, member)


def regrid(r: GridRegion, bound: int) -> GridRegion:
    """Same region on a larger grid (extra cells copy the last one)."""
    if bound == r.bound:
        return r
    if bound < r.bound:
        raise ValueError("cannot shrink a grid")
    idx = np.minimum(np.arange(bound + 1), r.bound)
    m = r.membership
    for axis in range(r.dimension):
        m = np.take(m, idx, axis=axis)
    return GridRegion(r.dimension, bound, m)


def _interval_table(L: int):
    ivs = [(lo, hc) for lo in range(L + 1) for hc in range(lo, L + 1)]
    pos = {iv: k for k, iv in enumerate(ivs)}
    lo = np.array([a for a, _ in ivs])
    hi = np.array([b + 1 for _, b in ivs])
    grow_lo = np.array([pos.get((a - 1, b), -1) for a, b in ivs])
    grow_hi = np.array([pos.get((a, b + 1), -1) for a, b in ivs])
    return ivs, lo, hi, grow_lo, grow_hi


def grid_maximal_cubes(r: GridRegion) -> frozenset:
    """All maximal boxes of the region, by exhaustive enumeration."""
    n, L = r.dimension, r.bound
    if n == 0:
        return frozenset([Cube()]) if bool(r.membership) else frozenset()
    ivs, lo, hi, grow_lo, grow_hi = _interval_table(L)

    # summed-area table of the excluded cells, zero-padded in front
    table = np.pad((~r.membership).astype(np.int64), [(1, 0)] * n)
    for axis in range(n):
        table = np.cumsum(table, axis=axis)
    bad = np.zeros((len(ivs),) * n, dtype=np.int64)
    for corner in product((0, 1), repeat=n):
        sel = [hi if bit else lo for bit in corner]
        sign = -1 if (n - sum(corner)) % 2 else 1
        bad += sign * table[np.ix_(*sel)]
    inside = bad == 0

    maximal = inside.copy()
    for axis in range(n):
        for grow in (grow_lo, grow_hi):
            shape = [1] * n
            shape[axis] = len(ivs)
            ok = (grow >= 0).reshape(shape)
            bigger = np.take(inside, np.maximum(grow, 0), axis=axis)
            maximal &= ~(bigger & ok)

    out = []
    for box in zip(*np.nonzero(maximal)):
        out.append(Cube(
            Interval(ivs[k][0], INF if ivs[k][1] == L else ivs[k][1] + 1) for k in box
        ))
    return frozenset(out)


def grid_area(r: GridRegion) -> Area:
    """The region as an :class:`Area` built from the oracle's own maximal cubes."""
    return Area._trusted(r.dimension, grid_maximal_cubes(r))


def _projection(m: np.ndarray, keep: Sequence[int]) -> np.ndarray:
    drop = tuple(a for a in range(m.ndim) if a not in keep)
    return m.any(axis=drop, keepdims=True) if drop else m


def grid_is_product(r: GridRegion, A: Sequence[int]) -> bool:
    """Does the region equal (its projection on A) x (its projection on the rest)?"""
    A = sorted(set(A))
    if not A or len(A) >= r.dimension or A[0] < 1 or A[-1] > r.dimension:
        raise ValueError(f"{A} is not a proper non-empty subset of 1..{r.dimension}")
    keep = [k - 1 for k in A]
    rest = [a for a in range(r.dimension) if a not in keep]
    m = r.membership
    return bool(np.array_equal(m, _projection(m, keep) & _projection(m, rest)))


def grid_is_irreducible(r: GridRegion) -> bool:
    """Non-empty, positive dimension, and no proper coordinate split."""
    n = r.dimension
    if n == 0 or not r.membership.any():
        return False
    for size in range(1, n // 2 + 1):
        for A in combinations(range(1, n + 1), size):
            if grid_is_product(r, A):
                return False
    return True


def grid_equivalent(r1: GridRegion, r2: GridRegion) -> bool:
    """Equal up to a permutation of coordinates."""
    if r1.dimension != r2.dimension:
        return False
    L = max(r1.bound, r2.bound)
    m1 = regrid(r1, L).membership
    m2 = regrid(r2, L).membership
    return any(np.array_equal(np.transpose(m1, perm), m2)
               for perm in permutations(range(r1.dimension)))
