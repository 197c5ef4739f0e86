"""Prime factorization of cubical areas.

A set ``S`` of maximal cubes splits along a coordinate set ``A`` when every
cube's restriction to ``A`` is paired with the same set of restrictions to
the complement. Scanning candidate sets ``A`` smallest first means the first
one that splits yields an irreducible factor.
"""

from __future__ import annotations

from collections import defaultdict
from dataclasses import dataclass
from itertools import combinations
from typing import Iterable, Iterator, Sequence

from .geometry import Area, Cube, Permutation, area_permute, area_product

CubeSet = frozenset  # of Cube


def _check_subset(dimension: int, A: Sequence[int]) -> tuple[int, ...]:
    A = tuple(sorted(set(A)))
    if not A:
        raise ValueError("index set must be non-empty")
    if A[0] < 1 or A[-1] > dimension:
        raise ValueError(f"index set {A} out of range 1..{dimension}")
    return A


def _complement(dimension: int, A: Sequence[int]) -> tuple[int, ...]:
    chosen = set(A)
    return tuple(k for k in range(1, dimension + 1) if k not in chosen)


def _dimension_of(S: Iterable[Cube]) -> int:
    for c in S:
        return len(c)
    raise ValueError("empty cube set has no dimension")


def project(S: Iterable[Cube], A: Sequence[int]) -> CubeSet:
    """``{w∘A | w ∈ S}`` for 1-based coordinates ``A``."""
    S = tuple(S)
    A = _check_subset(_dimension_of(S), A)
    idx = [k - 1 for k in A]
    return frozenset(c.restrict(idx) for c in S)


def fiber(S: Iterable[Cube], A: Sequence[int], w: Cube) -> CubeSet:
    """Complement-restrictions of the cubes of ``S`` whose ``A``-restriction is ``w``."""
    S = tuple(S)
    d = _dimension_of(S)
    A = _check_subset(d, A)
    ia = [k - 1 for k in A]
    ic = [k - 1 for k in _complement(d, A)]
    w = tuple(w)
    out = frozenset(c.restrict(ic) for c in S if tuple(c.restrict(ia)) == w)
    if not out:
        raise ValueError(f"{Cube(w)} is not the projection of any cube")
    return out


def _split(S: Sequence[Cube], ia: Sequence[int], ic: Sequence[int]):
    groups: dict[Cube, set] = defaultdict(set)
    for c in S:
        groups[c.restrict(ia)].add(c.restrict(ic))
    return groups


def is_divisor(S: Iterable[Cube], A: Sequence[int]) -> bool:
    """True iff ``S`` is the concatenation product of its projections on
    ``A`` and on the complement of ``A``."""
    S = tuple(S)
    d = _dimension_of(S)
    A = _check_subset(d, A)
    if len(A) == d:
        raise ValueError("index set must be a proper subset")
    return _divides(S, [k - 1 for k in A], [k - 1 for k in _complement(d, A)])


def _divides(S, ia, ic) -> bool:
    groups = _split(S, ia, ic)
    fibers = iter(groups.values())
    first = next(fibers)
    # when all fibers agree, each one is the whole complement projection
    return all(fib == first for fib in fibers)


def next_subset_order(n: int) -> Iterator[tuple[int, ...]]:
    """Candidate factor coordinate sets, by size then lexicographically.

    Sizes stop at ``n // 2``; at exactly half size only sets holding 1 are
    listed, the others being complements of earlier candidates.
    """
    for size in range(1, n // 2 + 1):
        for A in combinations(range(1, n + 1), size):
            if 2 * size == n and A[0] != 1:
                continue
            yield A


@dataclass(frozen=True)
class Factor:
    indices: tuple[int, ...]  # original 1-based coordinates, increasing
    area: Area


@dataclass(frozen=True)
class Factorization:
    factors: tuple[Factor, ...]

    @property
    def partition(self) -> list[list[int]]:
        return [list(f.indices) for f in self.factors]

    @property
    def dimension(self) -> int:
        return sum(len(f.indices) for f in self.factors)

    def is_trivial(self) -> bool:
        """True when there is at most one factor (nothing decomposes)."""
        return len(self.factors) <= 1

    def format_partition(self) -> str:
        if self.is_trivial():
            return "No decomposition"
        return "".join("{" + ",".join(map(str, f.indices)) + "}" for f in self.factors)

    def reassemble(self) -> Area:
        """Product of the factors, permuted back to the original coordinates."""
        acc = Area.unit()
        order: list[int] = []
        for f in self.factors:
            acc = area_product(acc, f.area)
            order.extend(f.indices)
        if not order:
            return acc
        # coordinate k of the result sits at position order.index(k) of acc
        return area_permute(acc, Permutation(order).inverse())


def factorize(area: Area) -> Factorization:
    if area.dimension == 0:
        if area.is_empty():
            raise ValueError("cannot factor the empty area")
        return Factorization(())
    if area.is_empty():
        raise ValueError("cannot factor the empty area")

    factors = []
    remaining = list(range(1, area.dimension + 1))
    S: Sequence[Cube] = area.cubes
    while True:
        n = len(remaining)
        for A in next_subset_order(n):
            ia = [k - 1 for k in A]
            ic = [k - 1 for k in _complement(n, A)]
            if _divides(S, ia, ic):
                factors.append(_make_factor([remaining[i] for i in ia],
                                            {c.restrict(ia) for c in S}))
                S = tuple({c.restrict(ic) for c in S})
                remaining = [remaining[i] for i in ic]
                break
        else:
            factors.append(_make_factor(remaining, S))
            break
    factors.sort(key=lambda f: f.indices[0])
    return Factorization(tuple(factors))


def _make_factor(indices: Sequence[int], cubes: Iterable[Cube]) -> Factor:
    # projections of a product's maximal cubes are the factor's maximal cubes,
    # so sorting is all the normalization needed here
    return Factor(tuple(indices), Area._trusted(len(indices), cubes))
