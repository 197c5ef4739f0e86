"""Half-open intervals, cubes and canonical cubical areas.

An :class:`Area` is stored by its maximal cubes, sorted, which makes it a
normal form: two areas denote the same subset of ``[0, inf[^n`` exactly when
their cube tuples are equal.
"""

from __future__ import annotations

import math
from itertools import product
from typing import Iterable, NamedTuple, Sequence, Union

import numpy as np

from . import kernels

INF = math.inf

Endpoint = Union[int, float]


class _IntervalFields(NamedTuple):
    lo: int
    hi: Endpoint


class Interval(_IntervalFields):
    """The half-open interval ``[lo, hi[``; ``hi`` may be ``INF``.

    Tuple ordering (lo first, then hi, ``INF`` greatest) is the canonical order.
    """

    __slots__ = ()

    def __new__(cls, lo: int, hi: Endpoint = INF) -> "Interval":
        if hi is None:
            hi = INF
        if isinstance(lo, bool) or not isinstance(lo, (int, np.integer)) or lo < 0:
            raise ValueError(f"lower bound must be a non-negative integer, got {lo!r}")
        if hi != INF:
            if isinstance(hi, bool) or not isinstance(hi, (int, np.integer)):
                raise ValueError(f"upper bound must be an integer or INF, got {hi!r}")
            hi = int(hi)
        lo = int(lo)
        if not lo < hi:
            raise ValueError(f"empty interval [{lo},{hi}[")
        return super().__new__(cls, lo, hi)

    def __contains__(self, t) -> bool:
        return self.lo <= t < self.hi

    def contains(self, other: "Interval") -> bool:
        return self.lo <= other.lo and other.hi <= self.hi

    def __str__(self) -> str:
        hi = "-" if self.hi == INF else str(self.hi)
        return f"[{self.lo},{hi}["

    def __repr__(self) -> str:
        return f"Interval({self.lo}, {'INF' if self.hi == INF else self.hi})"


FULL = Interval(0, INF)


def interval_intersect(a: Interval, b: Interval) -> Interval | None:
    """``a`` ∩ ``b``, or ``None`` when they are disjoint."""
    lo = max(a.lo, b.lo)
    hi = min(a.hi, b.hi)
    if lo < hi:
        return Interval(lo, hi)
    return None


class Cube(tuple):
    """A word of intervals, i.e. the product of its coordinates.

    Built from :class:`Interval` values or ``(lo, hi)`` pairs, ``hi`` being
    ``None`` or ``INF`` for an unbounded coordinate.
    """

    __slots__ = ()

    def __new__(cls, intervals: Iterable = ()) -> "Cube":
        return super().__new__(
            cls, (iv if type(iv) is Interval else Interval(*iv) for iv in intervals)
        )

    @classmethod
    def _raw(cls, intervals) -> "Cube":
        return tuple.__new__(cls, intervals)

    @property
    def dimension(self) -> int:
        return len(self)

    def restrict(self, indices: Sequence[int]) -> "Cube":
        """Subword on the given 0-based coordinates, in the order given."""
        return Cube._raw(tuple(self[i] for i in indices))

    def concat(self, other: "Cube") -> "Cube":
        return Cube._raw(tuple(self) + tuple(other))

    def __str__(self) -> str:
        if not self:
            return "()"
        return "*".join(str(iv) for iv in self)

    def __repr__(self) -> str:
        return f"Cube({str(self)})"


def cube_contains(outer: Cube, inner: Cube) -> bool:
    if len(outer) != len(inner):
        raise ValueError(
            f"dimension mismatch: {len(outer)} vs {len(inner)}"
        )
    return all(o.contains(i) for o, i in zip(outer, inner))


def parse_cube(text: str) -> Cube:
    """Inverse of ``str(cube)``: ``[0,1[*[4,-[`` -> Cube."""
    text = text.strip()
    if text in ("", "()"):
        return Cube()
    out = []
    for part in text.split("*"):
        part = part.strip()
        if not (part.startswith("[") and part.endswith("[")):
            raise ValueError(f"bad interval {part!r}")
        lo, _, hi = part[1:-1].partition(",")
        out.append(Interval(int(lo), INF if hi.strip() == "-" else int(hi)))
    return Cube._raw(tuple(out))


# -- array encoding used by the kernels ---------------------------------------

def _to_array(cubes: Sequence[Cube], dimension: int) -> np.ndarray:
    arr = np.empty((len(cubes), dimension, 2), dtype=np.int64)
    for r, cube in enumerate(cubes):
        for k, iv in enumerate(cube):
            arr[r, k, 0] = iv.lo
            arr[r, k, 1] = kernels.INF_CODE if iv.hi == INF else iv.hi
    return arr


def _from_array(arr: np.ndarray) -> tuple[Cube, ...]:
    inf_code = kernels.INF_CODE
    out = []
    for row in arr.tolist():
        out.append(Cube._raw(tuple(
            tuple.__new__(Interval, (lo, INF if hi == inf_code else hi))
            for lo, hi in row
        )))
    return tuple(out)


class Area:
    """A cubical area of ``[0, inf[^dimension`` held as its maximal cubes.

    ``Area(n, cubes)`` accepts any finite cover and normalizes it; the result
    denotes the union of ``cubes``. An empty cover gives the empty area.
    """

    __slots__ = ("dimension", "cubes")

    def __init__(self, dimension: int, cubes: Iterable = ()):
        cubes = [c if type(c) is Cube else Cube(c) for c in cubes]
        _check_dims(dimension, cubes)
        canon = _canonical_cover(dimension, cubes)
        object.__setattr__(self, "dimension", dimension)
        object.__setattr__(self, "cubes", canon)

    @classmethod
    def _trusted(cls, dimension: int, cubes: Iterable[Cube]) -> "Area":
        # caller guarantees cubes already are the maximal cubes of their union
        self = object.__new__(cls)
        object.__setattr__(self, "dimension", dimension)
        object.__setattr__(self, "cubes", tuple(sorted(set(cubes))))
        return self

    @classmethod
    def unit(cls) -> "Area":
        return cls._trusted(0, [Cube()])

    @classmethod
    def empty(cls, dimension: int) -> "Area":
        return cls._trusted(dimension, [])

    @classmethod
    def full(cls, dimension: int) -> "Area":
        return cls._trusted(dimension, [Cube._raw((FULL,) * dimension)])

    def __setattr__(self, name, value):
        raise AttributeError("Area is immutable")

    def is_empty(self) -> bool:
        return not self.cubes

    def __len__(self) -> int:
        return len(self.cubes)

    def __iter__(self):
        return iter(self.cubes)

    def __eq__(self, other) -> bool:
        if not isinstance(other, Area):
            return NotImplemented
        return self.dimension == other.dimension and self.cubes == other.cubes

    def __hash__(self) -> int:
        return hash((self.dimension, self.cubes))

    def __mul__(self, other: "Area") -> "Area":
        return area_product(self, other)

    def __contains__(self, point) -> bool:
        if len(point) != self.dimension:
            raise ValueError("point has wrong dimension")
        return any(all(t in iv for t, iv in zip(point, c)) for c in self.cubes)

    def max_endpoint(self) -> int:
        """Largest finite endpoint among the cubes (0 if there is none)."""
        best = 0
        for c in self.cubes:
            for iv in c:
                best = max(best, iv.lo)
                if iv.hi != INF:
                    best = max(best, iv.hi)
        return best

    def render(self) -> str:
        """Cube listing, one per line, continuation lines prefixed ``|| ``."""
        return "\n".join(
            ("   " if k == 0 else "|| ") + str(c) for k, c in enumerate(self.cubes)
        )

    def __repr__(self) -> str:
        body = " | ".join(str(c) for c in self.cubes)
        return f"Area({self.dimension}: {body or 'empty'})"


def _check_dims(dimension: int, cubes: Sequence[Cube]) -> None:
    if dimension < 0:
        raise ValueError("dimension must be non-negative")
    for c in cubes:
        if len(c) != dimension:
            raise ValueError(
                f"cube {c} has dimension {len(c)}, expected {dimension}"
            )


def _complement_cubes(dimension: int, forbidden: Sequence[Cube]) -> tuple[Cube, ...]:
    if dimension == 0:
        return () if forbidden else (Cube(),)
    cur = _to_array([Cube._raw((FULL,) * dimension)], dimension)
    if forbidden:
        boxes = kernels.unique_rows(_to_array(forbidden, dimension))
        # drop nested obstacles: they change nothing once the outer one is gone
        boxes = boxes[~kernels.dominated_mask(boxes)]
        for box in boxes:
            cur = kernels.subtract_box(cur, box)
            if cur.shape[0] == 0:
                break
    return _from_array(cur)


def _canonical_cover(dimension: int, cubes: Sequence[Cube]) -> tuple[Cube, ...]:
    # the maximal cubes of a union are those of the complement of its complement
    outside = _complement_cubes(dimension, cubes)
    return _complement_cubes(dimension, outside)


def complement_area(dimension: int, forbidden: Iterable) -> Area:
    """Maximal cubes of ``[0, inf[^dimension`` minus the union of ``forbidden``."""
    forbidden = [c if type(c) is Cube else Cube(c) for c in forbidden]
    _check_dims(dimension, forbidden)
    return Area._trusted(dimension, _complement_cubes(dimension, forbidden))


def canonicalize(area: Area) -> Area:
    """Recompute the maximal-cube form from scratch."""
    return Area(area.dimension, area.cubes)


def area_product(x: Area, y: Area) -> Area:
    """Cartesian product; concatenating maximal cubes gives maximal cubes."""
    return Area._trusted(
        x.dimension + y.dimension, (a.concat(b) for a, b in product(x.cubes, y.cubes))
    )


def area_equal(x: Area, y: Area) -> bool:
    return x == y


class Permutation(tuple):
    """A bijection of ``{1..n}`` written as the sequence ``(σ(1), ..., σ(n))``.

    It acts on words on the right: ``σ·w = (w[σ(1)], ..., w[σ(n)])``.
    """

    __slots__ = ()

    def __new__(cls, mapping: Iterable[int] = ()) -> "Permutation":
        mapping = tuple(int(k) for k in mapping)
        if sorted(mapping) != list(range(1, len(mapping) + 1)):
            raise ValueError(f"not a permutation of 1..{len(mapping)}: {mapping}")
        return super().__new__(cls, mapping)

    @classmethod
    def identity(cls, n: int) -> "Permutation":
        return cls(range(1, n + 1))

    @classmethod
    def from_cycles(cls, n: int, *cycles: Sequence[int]) -> "Permutation":
        """``Permutation.from_cycles(4, (2, 3))`` is the transposition (2,3)."""
        img = list(range(n + 1))
        for cyc in cycles:
            for a, b in zip(cyc, cyc[1:] + cyc[:1]):
                img[a] = b
        return cls(img[1:])

    @property
    def size(self) -> int:
        return len(self)

    def __call__(self, k: int) -> int:
        return self[k - 1]

    def compose(self, other: "Permutation") -> "Permutation":
        """``k -> self(other(k))``; acting by it equals acting by ``self`` then ``other``."""
        if len(self) != len(other):
            raise ValueError("permutation sizes differ")
        return Permutation(self[k - 1] for k in other)

    def inverse(self) -> "Permutation":
        inv = [0] * len(self)
        for k, v in enumerate(self, start=1):
            inv[v - 1] = k
        return Permutation(inv)

    def juxtapose(self, other: "Permutation") -> "Permutation":
        """σ ⊗ σ′: σ on the first block, σ′ shifted onto the second."""
        n = len(self)
        return Permutation(tuple(self) + tuple(v + n for v in other))

    def act(self, cube: Cube) -> Cube:
        return Cube._raw(tuple(cube[k - 1] for k in self))


def area_permute(x: Area, sigma: Sequence[int]) -> Area:
    if not isinstance(sigma, Permutation):
        sigma = Permutation(sigma)
    if len(sigma) != x.dimension:
        raise ValueError(
            f"permutation of size {len(sigma)} applied to area of dimension {x.dimension}"
        )
    return Area._trusted(x.dimension, (sigma.act(c) for c in x.cubes))
