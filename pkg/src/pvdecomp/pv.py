"""PV programs: data model, text format and benchmark generators.

File format (one declaration per line)::

    # comment
    sem a 2
    sem c 3
    proc p1 = P(a).P(c).V(c).V(a)

Process order in the file fixes the coordinate of each process.
"""

from __future__ import annotations

import re
from dataclasses import dataclass, field
from typing import Mapping, Sequence

_IDENT = r"[A-Za-z_][A-Za-z0-9_]*"
_IDENT_RE = re.compile(_IDENT)
_INSTR_RE = re.compile(rf"\s*([PV])\s*\(\s*({_IDENT})\s*\)\s*")


class PVError(ValueError):
    """Invalid PV program. ``line`` and ``column`` are 1-based when known."""

    def __init__(self, message: str, line: int | None = None, column: int | None = None):
        self.line = line
        self.column = column
        where = ""
        if line is not None:
            where = f"line {line}" + (f", column {column}" if column is not None else "") + ": "
        super().__init__(where + message)


@dataclass(frozen=True)
class Instruction:
    kind: str  # "P" or "V"
    semaphore: str

    def __post_init__(self):
        if self.kind not in ("P", "V"):
            raise PVError(f"unknown instruction kind {self.kind!r}")

    def __str__(self) -> str:
        return f"{self.kind}({self.semaphore})"


def P(s: str) -> Instruction:
    return Instruction("P", s)


def V(s: str) -> Instruction:
    return Instruction("V", s)


@dataclass(frozen=True)
class Process:
    name: str
    body: tuple[Instruction, ...] = ()

    def __post_init__(self):
        object.__setattr__(self, "body", tuple(self.body))

    def __len__(self) -> int:
        return len(self.body)

    def __getitem__(self, n: int) -> Instruction:
        """1-based access: ``proc[1]`` is the first instruction."""
        if not 1 <= n <= len(self.body):
            raise IndexError(n)
        return self.body[n - 1]

    def semaphores(self) -> set[str]:
        return {ins.semaphore for ins in self.body}

    def __str__(self) -> str:
        return ".".join(str(ins) for ins in self.body)


@dataclass(frozen=True)
class Program:
    """Semaphore arities plus an ordered list of processes."""

    env: Mapping[str, int] = field(default_factory=dict)
    processes: tuple[Process, ...] = ()

    def __post_init__(self):
        object.__setattr__(self, "env", dict(self.env))
        object.__setattr__(self, "processes", tuple(self.processes))
        for s, arity in self.env.items():
            if not isinstance(arity, int) or arity < 2:
                raise PVError(f"semaphore {s!r} has arity {arity}; arity must be >= 2")
        names = [p.name for p in self.processes]
        if len(set(names)) != len(names):
            raise PVError("duplicate process name")
        for p in self.processes:
            for s in p.semaphores():
                if s not in self.env:
                    raise PVError(f"process {p.name!r} uses undeclared semaphore {s!r}")

    @property
    def n(self) -> int:
        return len(self.processes)

    def with_arity(self, semaphore: str, arity: int) -> "Program":
        env = dict(self.env)
        env[semaphore] = arity
        return Program(env, self.processes)

    def summary(self) -> str:
        sems = " ".join(f"{s}/{a}" for s, a in self.env.items())
        return f"N={self.n} semaphores: {sems or '-'}"


def parse_program(text: str) -> Program:
    env: dict[str, int] = {}
    processes: list[Process] = []
    uses: list[tuple[str, int, int]] = []
    for lineno, raw in enumerate(text.splitlines(), start=1):
        line = raw.strip()
        if not line or line.startswith("#"):
            continue
        col0 = raw.index(line[0]) + 1
        keyword, _, rest = line.partition(" ")
        if keyword == "sem":
            parts = rest.split()
            if len(parts) != 2 or not _IDENT_RE.fullmatch(parts[0]):
                raise PVError("expected 'sem <name> <arity>'", lineno, col0)
            name, arity_s = parts
            try:
                arity = int(arity_s)
            except ValueError:
                raise PVError(f"arity {arity_s!r} is not an integer", lineno,
                              raw.index(arity_s, col0 + 3) + 1) from None
            if arity < 2:
                raise PVError(f"semaphore {name!r} has arity {arity}; arity must be >= 2",
                              lineno, raw.index(arity_s, col0 + 3) + 1)
            if name in env:
                raise PVError(f"duplicate semaphore {name!r}", lineno, col0)
            env[name] = arity
        elif keyword == "proc":
            name, eq, body = rest.partition("=")
            name = name.strip()
            if not eq or not _IDENT_RE.fullmatch(name):
                raise PVError("expected 'proc <name> = <instr>(.<instr>)*'", lineno, col0)
            if any(p.name == name for p in processes):
                raise PVError(f"duplicate process {name!r}", lineno, col0)
            offset = len(raw) - len(raw.lstrip()) + len(line) - len(body)
            instrs = _parse_body(body, lineno, offset, uses)
            processes.append(Process(name, instrs))
        else:
            raise PVError(f"unknown declaration {keyword!r}", lineno, col0)
    for s, lineno, col in uses:
        if s not in env:
            raise PVError(f"undeclared semaphore {s!r}", lineno, col)
    return Program(env, processes)


def _parse_body(body: str, lineno: int, offset: int, uses: list) -> list[Instruction]:
    if not body.strip():
        return []
    out = []
    pos = 0
    while True:
        m = _INSTR_RE.match(body, pos)
        if m is None:
            raise PVError("expected P(<name>) or V(<name>)", lineno, offset + pos + 1)
        out.append(Instruction(m.group(1), m.group(2)))
        uses.append((m.group(2), lineno, offset + m.start(2) + 1))
        pos = m.end()
        if pos == len(body):
            return out
        if body[pos] != ".":
            raise PVError("expected '.' between instructions", lineno, offset + pos + 1)
        pos += 1


def render_program(program: Program) -> str:
    lines = [f"sem {s} {a}" for s, a in program.env.items()]
    lines += [f"proc {p.name} = {p}" for p in program.processes]
    return "\n".join(lines) + ("\n" if lines else "")


def gen_sigma(group_sizes: Sequence[int], strict: bool = False) -> Program:
    """Groups of ``P(a_i).P(b).V(b).V(a_i)`` copies sharing ``b``.

    ``b`` has arity k+1 (k groups), or k when ``strict``. Processes are emitted
    round-robin across groups.
    """
    sizes = list(group_sizes)
    k = len(sizes)
    if k < 1 or any(n < 1 for n in sizes):
        raise ValueError("need at least one group, each of size >= 1")
    arity_b = k if strict else k + 1
    if arity_b < 2:
        raise ValueError("strict variant with a single group would give b arity 1")
    env = {f"a{i}": 2 for i in range(1, k + 1)}
    env["b"] = arity_b
    procs = []
    for rnd in range(max(sizes)):
        for i, n in enumerate(sizes, start=1):
            if rnd < n:
                a = f"a{i}"
                procs.append(Process(f"p{len(procs) + 1}", (P(a), P("b"), V("b"), V(a))))
    return Program(env, procs)


def gen_philosophers(n: int) -> Program:
    if n < 2:
        raise ValueError("need at least 2 philosophers")
    env = {f"f{i}": 2 for i in range(1, n + 1)}
    procs = []
    for i in range(1, n + 1):
        left, right = f"f{i}", f"f{i % n + 1}"
        procs.append(Process(f"phil{i}", (P(left), P(right), V(right), V(left))))
    return Program(env, procs)


def parse_generator(spec: str) -> Program:
    """``sigma:2,2``, ``sigma-prime:3,3`` or ``philosophers:5``."""
    family, _, args = spec.partition(":")
    try:
        nums = [int(a) for a in args.split(",") if a.strip()]
    except ValueError:
        raise ValueError(f"bad generator arguments in {spec!r}") from None
    if family == "sigma":
        return gen_sigma(nums)
    if family in ("sigma-prime", "sigma_prime"):
        return gen_sigma(nums, strict=True)
    if family == "philosophers":
        if len(nums) != 1:
            raise ValueError("philosophers takes a single count")
        return gen_philosophers(nums[0])
    raise ValueError(f"unknown generator family {family!r}")
