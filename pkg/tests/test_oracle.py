import numpy as np
import pytest

from _corpus import SIGMA_MODEL, SWISS_CUBES, complement_corpus, cubes
from pvdecomp.geometry import Area, complement_area, parse_cube
from pvdecomp.oracle import (
    GridRegion,
    grid_equivalent,
    grid_is_irreducible,
    grid_is_product,
    grid_maximal_cubes,
    grid_of_area,
    grid_of_complement,
    grid_of_program,
    holds_at,
    regrid,
)
from pvdecomp.pv import parse_program


def test_unit_area_grid():
    r = grid_of_area(Area.unit())
    assert r.membership.shape == () and bool(r.membership)
    assert grid_maximal_cubes(r) == frozenset(Area.unit().cubes)


def test_line_grid():
    r = grid_of_area(Area(1, cubes(["[0,1["])), bound=2)
    assert r.membership.tolist() == [True, False, False]


def test_swiss_grid(swiss):
    r = grid_of_program(swiss)
    assert r.bound == 5 and r.membership.size == 36
    assert r.count() == 31  # 5 of the 36 cells are in the two rectangles
    assert r == grid_of_area(Area._trusted(2, cubes(SWISS_CUBES)), bound=5)


def test_unfaithful_bound_rejected():
    with pytest.raises(ValueError):
        grid_of_area(Area(1, cubes(["[0,4["])), bound=3)


def test_maximal_cubes_of_hole():
    r = grid_of_complement(2, [parse_cube("[1,2[*[1,2[")], 3)
    got = sorted(str(c) for c in grid_maximal_cubes(r))
    assert got == ["[0,-[*[0,1[", "[0,-[*[2,-[", "[0,1[*[0,-[", "[2,-[*[0,-["]


def test_maximal_cubes_full_region():
    r = GridRegion(3, 2, np.ones((3, 3, 3), dtype=bool))
    assert [str(c) for c in grid_maximal_cubes(r)] == ["[0,-[*[0,-[*[0,-["]


def test_sigma_grid_gives_model(sigma):
    r = grid_of_program(sigma)
    assert r.bound == 5
    assert grid_maximal_cubes(r) == frozenset(cubes(SIGMA_MODEL))


def test_grid_products(sigma, swiss):
    rs = grid_of_program(sigma)
    assert grid_is_product(rs, [1, 3])
    r = grid_of_program(swiss)
    assert not grid_is_product(r, [1])
    m = r.membership
    assert m[0, 2] and not m[2, 2] and m[2, 0]
    one = grid_of_area(Area(3, cubes(["[1,2[*[0,3[*[2,-["])))
    for A in ([1], [2], [3], [1, 2], [2, 3]):
        assert grid_is_product(one, A)
    with pytest.raises(ValueError):
        grid_is_product(one, [1, 2, 3])


@pytest.mark.parametrize("n, forb", complement_corpus(40, seed=77, dims=(2, 3)))
def test_product_test_is_symmetric(n, forb):
    r = grid_of_complement(n, forb, 5)
    for A in ([1], [2], [1, 2][: n - 1]):
        rest = [k for k in range(1, n + 1) if k not in A]
        assert grid_is_product(r, A) == grid_is_product(r, rest)


@pytest.mark.parametrize("n, forb", complement_corpus(40, seed=78))
def test_faithful_round_trip(n, forb):
    x = complement_area(n, forb)
    for L in (x.max_endpoint() + 1, x.max_endpoint() + 3):
        assert grid_maximal_cubes(grid_of_area(x, L)) == frozenset(x.cubes)


def test_regrid_and_equivalence():
    x = complement_area(2, [parse_cube("[1,2[*[0,3[")])
    y = complement_area(2, [parse_cube("[0,3[*[1,2[")])
    rx, ry = grid_of_area(x), grid_of_area(y, 6)
    assert regrid(rx, 6).bound == 6 and regrid(rx, 6) == rx
    assert rx != ry and grid_equivalent(rx, ry)


def test_irreducibility():
    assert grid_is_irreducible(grid_of_area(Area._trusted(2, cubes(SWISS_CUBES))))
    assert not grid_is_irreducible(grid_of_area(Area.full(2)))
    assert grid_is_irreducible(grid_of_area(Area.full(1)))
    assert not grid_is_irreducible(grid_of_area(Area.empty(1)))


def test_holds_at_ignores_redundant_instructions():
    p = parse_program("sem a 2\nproc x = V(a).P(a).P(a).V(a).V(a)").processes[0]
    assert [sorted(holds_at(p, k)) for k in range(6)] == [[], [], ["a"], ["a"], [], []]
