"""Independence analysis of PV programs through factorization of cubical areas."""

from .factorization import Factor, Factorization, factorize, fiber, is_divisor, next_subset_order, project
from .geometry import (
    FULL,
    INF,
    Area,
    Cube,
    Interval,
    Permutation,
    area_equal,
    area_permute,
    area_product,
    canonicalize,
    complement_area,
    cube_contains,
    interval_intersect,
    parse_cube,
)
from .pv import Instruction, Process, Program, PVError, gen_philosophers, gen_sigma, parse_program, render_program
from .semantics import busy_intervals, forbidden_area, state_space

__version__ = "0.1.0"
