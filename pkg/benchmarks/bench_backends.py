"""Compare the numba and pure-numpy kernel backends.

Each backend runs in its own interpreter, because the backend is fixed at
import time by ``PVDECOMP_DISABLE_NUMBA``. JIT compilation is excluded by a
warm-up run before timing.

    python benchmarks/bench_backends.py
    python benchmarks/bench_backends.py sigma:4,4 philosophers:8 --repeat 5
"""

import argparse
import json
import os
import subprocess
import sys

DEFAULT_SPECS = [
    "philosophers:6", "philosophers:7", "philosophers:8",
    "sigma:3,3", "sigma-prime:3,3", "sigma:2,2,2,2", "sigma-prime:2,2,2,2",
    "sigma:4,4", "sigma:3,3,3",
]

_WORKER = r"""
import json, sys, time
import numpy as np
from pvdecomp import kernels
from pvdecomp.geometry import complement_area
from pvdecomp.pv import parse_generator
from pvdecomp.semantics import forbidden_area

specs, repeat = json.loads(sys.argv[1]), int(sys.argv[2])
complement_area(2, [((1, 2), (1, 2))])  # warm-up / JIT

rows = {}
for spec in specs:
    prog = parse_generator(spec)
    forb = forbidden_area(prog)
    best = float("inf")
    for _ in range(repeat):
        t = time.perf_counter()
        area = complement_area(prog.n, forb)
        best = min(best, time.perf_counter() - t)
    rows[spec] = {"seconds": best, "cubes": len(area)}

# raw kernel: containment test over a random cube cloud
rng = np.random.default_rng(0)
lo = rng.integers(0, 6, size=(4000, 6))
cubes = np.stack([lo, lo + rng.integers(1, 6, size=lo.shape)], axis=-1).astype(np.int64)
cubes = kernels.unique_rows(cubes)
kernels.dominated_mask(cubes[:10])
best = float("inf")
for _ in range(repeat):
    t = time.perf_counter()
    kernels.dominated_mask(cubes)
    best = min(best, time.perf_counter() - t)
rows["dominated_mask[4000x6]"] = {"seconds": best, "cubes": int(cubes.shape[0])}
print(json.dumps({"backend": kernels.BACKEND, "rows": rows}))
"""


def run(backend, specs, repeat):
    env = dict(os.environ)
    env["PVDECOMP_DISABLE_NUMBA"] = "1" if backend == "numpy" else ""
    out = subprocess.run(
        [sys.executable, "-c", _WORKER, json.dumps(specs), str(repeat)],
        env=env, check=True, capture_output=True, text=True,
    )
    data = json.loads(out.stdout)
    assert data["backend"] == backend, data["backend"]
    return data["rows"]


def main():
    ap = argparse.ArgumentParser(description=__doc__.splitlines()[0])
    ap.add_argument("specs", nargs="*", default=DEFAULT_SPECS)
    ap.add_argument("--repeat", type=int, default=3)
    args = ap.parse_args()

    fast = run("numba", args.specs, args.repeat)
    slow = run("numpy", args.specs, args.repeat)
    print(f"{'case':<24} {'cubes':>7} {'numba ms':>10} {'numpy ms':>10} {'speedup':>8}")
    for name in fast:
        a, b = fast[name], slow[name]
        if a["cubes"] != b["cubes"]:
            print(f"{name}: backends disagree ({a['cubes']} vs {b['cubes']} cubes)")
            return 1
        print(f"{name:<24} {a['cubes']:>7} {a['seconds'] * 1e3:>10.2f} "
              f"{b['seconds'] * 1e3:>10.2f} {b['seconds'] / a['seconds']:>7.1f}x")
    return 0


if __name__ == "__main__":
    sys.exit(main())
