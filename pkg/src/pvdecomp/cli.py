"""``pvdecomp`` command line.

    pvdecomp analyze prog.pv --model
    pvdecomp analyze --gen sigma:2,2
    pvdecomp bench philosophers:6 sigma:3,3

Exit status: 0 on success, 1 for bad input, 2 when an internal check fails.
"""

from __future__ import annotations

import argparse
import json
import logging
import sys
import time
from typing import Sequence

from .factorization import Factorization, factorize
from .geometry import INF, Area, Cube, Interval, complement_area
from .pv import Program, PVError, parse_generator, parse_program
from .semantics import forbidden_area

log = logging.getLogger("pvdecomp")

ORACLE_MAX_DIM = 5

DEFAULT_BENCH = [
    "philosophers:3", "philosophers:4", "philosophers:5", "philosophers:6",
    "philosophers:7",
    "sigma:2,2", "sigma-prime:2,2",
    "sigma:2,2,2", "sigma-prime:2,2,2",
    "sigma:3,3", "sigma-prime:3,3",
    "sigma:2,2,2,2", "sigma-prime:2,2,2,2",
    "sigma:4,4", "sigma:3,3,3",
]


class InvariantError(RuntimeError):
    pass


def analyze(program: Program, decompose: bool = True) -> dict:
    """Run the pipeline; returns the state space, factorization and timings."""
    t0 = time.monotonic()
    forbidden = forbidden_area(program)
    t1 = time.monotonic()
    area = complement_area(program.n, forbidden)
    t2 = time.monotonic()
    fact = factorize(area) if decompose else None
    t3 = time.monotonic()
    if fact is not None and fact.reassemble() != area:
        raise InvariantError("factors do not reassemble to the state space")
    return {
        "area": area,
        "factorization": fact,
        "timings_ms": {
            "semantics": (t1 - t0) * 1e3,
            "normalization": (t2 - t1) * 1e3,
            "factorization": (t3 - t2) * 1e3,
        },
    }


def oracle_check(program: Program, area: Area, fact: Factorization | None) -> None:
    from . import oracle

    if program.n > ORACLE_MAX_DIM:
        raise PVError(f"--oracle-check supports at most {ORACLE_MAX_DIM} processes")
    ref = oracle.grid_of_program(program)
    L = max(ref.bound, area.max_endpoint() + 1)
    if oracle.regrid(ref, L) != oracle.grid_of_area(area, L):
        raise InvariantError("state space disagrees with direct simulation")
    if oracle.grid_maximal_cubes(ref) != frozenset(area.cubes):
        raise InvariantError("maximal cubes disagree with brute-force enumeration")
    if fact is None:
        return
    for f in fact.factors:
        if len(f.indices) < program.n and not oracle.grid_is_product(ref, f.indices):
            raise InvariantError(f"block {list(f.indices)} is not independent")
        if not oracle.grid_is_irreducible(oracle.grid_of_area(f.area)):
            raise InvariantError(f"factor {list(f.indices)} is reducible")


def _cube_json(cube: Cube) -> list:
    return [[iv.lo, None if iv.hi == INF else iv.hi] for iv in cube]


def cube_from_json(data) -> Cube:
    return Cube(Interval(lo, INF if hi is None else hi) for lo, hi in data)


def report_json(program: Program, result: dict) -> dict:
    area = result["area"]
    fact = result["factorization"]
    out = {
        "program": {
            "n": program.n,
            "semaphores": dict(program.env),
            "processes": [p.name for p in program.processes],
        },
        "dimension": area.dimension,
        "cubes": [_cube_json(c) for c in area.cubes],
        "partition": None,
        "factors": None,
        "timings_ms": {k: round(v, 3) for k, v in result["timings_ms"].items()},
    }
    if fact is not None:
        out["partition"] = fact.partition
        out["factors"] = [
            {"indices": list(f.indices), "cubes": [_cube_json(c) for c in f.area.cubes]}
            for f in fact.factors
        ]
    return out


def area_from_json(report: dict) -> Area:
    cubes = [cube_from_json(c) for c in report["cubes"]]
    return Area._trusted(report["dimension"], cubes)


def _load(args) -> Program:
    if args.gen:
        if args.path:
            raise PVError("give either a file or --gen, not both")
        try:
            return parse_generator(args.gen)
        except ValueError as exc:
            raise PVError(str(exc)) from None
    if not args.path:
        raise PVError("no input: give a program file or --gen")
    if args.path == "-":
        return parse_program(sys.stdin.read())
    try:
        with open(args.path, encoding="utf-8") as fh:
            return parse_program(fh.read())
    except OSError as exc:
        raise PVError(f"cannot read {args.path}: {exc.strerror}") from None


def cmd_analyze(args) -> int:
    program = _load(args)
    result = analyze(program, decompose=args.decompose)
    area, fact = result["area"], result["factorization"]
    if args.oracle_check:
        oracle_check(program, area, fact)
    if args.json:
        print(json.dumps(report_json(program, result), indent=2))
        return 0
    lines = []
    if args.summary:
        lines.append(f"program: {program.summary()}")
        lines.append(f"maximal cubes: {len(area)}")
    if args.model:
        lines.append(area.render())
    if fact is not None:
        lines.append(fact.format_partition())
    if args.oracle_check:
        lines.append("oracle check: ok")
    if args.timings:
        lines.append("timings (ms): " + " ".join(
            f"{k}={v:.2f}" for k, v in result["timings_ms"].items()))
    if lines:
        print("\n".join(lines))
    return 0


def cmd_bench(args) -> int:
    specs = args.specs or DEFAULT_BENCH
    rows = []
    for spec in specs:
        try:
            program = parse_generator(spec)
        except ValueError as exc:
            raise PVError(str(exc)) from None
        t = time.monotonic()
        result = analyze(program)
        elapsed = (time.monotonic() - t) * 1e3
        fact = result["factorization"]
        part = "No" if fact.is_trivial() else fact.format_partition()
        rows.append((spec, elapsed, part))
        log.info("%s done in %.1f ms", spec, elapsed)
    if args.json:
        print(json.dumps([{"example": s, "time_ms": round(t, 3), "decomposition": p}
                          for s, t, p in rows], indent=2))
        return 0
    width = max(len("Example"), *(len(s) for s, _, _ in rows))
    print(f"{'Example':<{width}}  {'Time (ms)':>10}  Decomp.")
    for spec, elapsed, part in rows:
        print(f"{spec:<{width}}  {elapsed:>10.1f}  {part}")
    return 0


def build_parser() -> argparse.ArgumentParser:
    parser = argparse.ArgumentParser(
        prog="pvdecomp",
        description="Split PV programs into independent groups of processes.",
    )
    parser.add_argument("-v", "--verbose", action="store_true", help="log progress to stderr")
    sub = parser.add_subparsers(dest="command", required=True)

    an = sub.add_parser("analyze", help="state space and decomposition of one program")
    an.add_argument("path", nargs="?", help="program file ('-' for stdin)")
    an.add_argument("--gen", metavar="FAMILY:ARGS",
                    help="generated program: sigma:2,2 | sigma-prime:2,2 | philosophers:5")
    an.add_argument("--model", action="store_true", help="print the maximal cubes")
    an.add_argument("--decompose", action=argparse.BooleanOptionalAction, default=True,
                    help="print the partition into independent groups (default: on)")
    an.add_argument("--json", action="store_true", help="machine-readable report")
    an.add_argument("--summary", action="store_true", help="print program size and cube count")
    an.add_argument("--timings", action="store_true", help="print per-phase wall time")
    an.add_argument("--oracle-check", action="store_true",
                    help=f"cross-check against brute force (at most {ORACLE_MAX_DIM} processes)")
    an.set_defaults(func=cmd_analyze)

    be = sub.add_parser("bench", help="timing table over generated programs")
    be.add_argument("specs", nargs="*", metavar="FAMILY:ARGS")
    be.add_argument("--json", action="store_true")
    be.set_defaults(func=cmd_bench)
    return parser


def main(argv: Sequence[str] | None = None) -> int:
    args = build_parser().parse_args(argv)
    logging.basicConfig(level=logging.INFO if args.verbose else logging.WARNING,
                        format="%(name)s: %(message)s")
    try:
        return args.func(args)
    except PVError as exc:
        print(f"error: {exc}", file=sys.stderr)
        return 1
    except InvariantError as exc:
        print(f"internal error: {exc}", file=sys.stderr)
        return 2


if __name__ == "__main__":
    sys.exit(main())
