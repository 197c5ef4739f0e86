"""Geometric model of a PV program: busy intervals, forbidden cubes, state space."""

from __future__ import annotations

from itertools import combinations, product

from . import kernels
from .geometry import FULL, INF, Area, Cube, Interval, _from_array, _to_array, complement_area
from .pv import Process, Program

BusyArea = tuple[Interval, ...]


def busy_intervals(process: Process, semaphore: str) -> BusyArea:
    """Positions at which ``process`` holds ``semaphore``.

    ``x_k`` is the first P(s) strictly after ``y_{k-1}`` (with ``y_{-1} = 0``)
    and ``y_k`` the first V(s) strictly after ``x_k``; missing ones are
    infinite. Redundant P or V instructions are skipped by construction.
    """
    body = process.body
    n = len(body)
    out = []
    y = 0
    while True:
        x = next((i for i in range(y + 1, n + 1)
                  if body[i - 1].kind == "P" and body[i - 1].semaphore == semaphore), INF)
        if x == INF:
            return tuple(out)
        y = next((i for i in range(x + 1, n + 1)
                  if body[i - 1].kind == "V" and body[i - 1].semaphore == semaphore), INF)
        out.append(Interval(x, y))
        if y == INF:
            return tuple(out)


def semaphore_forbidden(program: Program, semaphore: str) -> list[Cube]:
    """Cubes whose union is the set of points where ``semaphore`` is held by
    at least its arity many processes.

    One cube per choice of exactly ``arity`` processes and one busy interval
    for each of them; larger holder sets only give sub-cubes of these.
    """
    arity = program.env[semaphore]
    n = program.n
    busy = {i: busy_intervals(p, semaphore) for i, p in enumerate(program.processes)}
    holders = [i for i in range(n) if busy[i]]
    if len(holders) < arity:
        return []
    out = []
    for members in combinations(holders, arity):
        for choice in product(*(busy[i] for i in members)):
            word = [FULL] * n
            for i, iv in zip(members, choice):
                word[i] = iv
            out.append(Cube._raw(tuple(word)))
    return out


def forbidden_area(program: Program) -> tuple[Cube, ...]:
    """Union over all semaphores of their forbidden cubes, with cubes nested
    inside another one dropped. Sorted; not necessarily maximal."""
    n = program.n
    cubes = []
    for s in program.env:
        cubes.extend(semaphore_forbidden(program, s))
    if not cubes:
        return ()
    if n == 0:
        return (Cube(),)
    arr = kernels.unique_rows(_to_array(cubes, n))
    arr = arr[~kernels.dominated_mask(arr)]
    return _from_array(arr)


def state_space(program: Program) -> Area:
    """``[0, inf[^N`` minus the forbidden area, as maximal cubes."""
    return complement_area(program.n, forbidden_area(program))

