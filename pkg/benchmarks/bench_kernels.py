"""Benchmark the hot kernels under both backends.

Runs each workload in a subprocess with KPZLAB_BACKEND set to numba and to
numpy and prints the timings side by side:

    python benchmarks/bench_kernels.py [--scale 1.0]
"""

from __future__ import annotations

import argparse
import json
import os
import subprocess
import sys
import textwrap

_WORKLOADS = {
    "exclusion_step_current": """
        from kpzlab.asep import kinetic
        kinetic.step_current_samples(0.5, 10.0, 1, 0)  # warm the compiler
        t0 = time.time()
        kinetic.step_current_samples(0.5, {t}, {reps}, 1)
        out = time.time() - t0
    """,
    "colored_window": """
        from kpzlab.asep import kinetic
        kinetic.colored_height_samples(0.5, 2.0, [(0, 0)], 1, 0)
        t0 = time.time()
        kinetic.colored_height_samples(0.5, {t_col}, [(0, 0), (2, -1)], {reps_col}, 1)
        out = time.time() - t0
    """,
    "vertex_strip_batch": """
        from kpzlab import s6v
        bc = s6v.BoundaryCondition.packed({n_strip})
        s6v.heights_batch(bc, 0.5, 0.4, 4, 0, 10, [(0, 0)])
        t0 = time.time()
        s6v.heights_batch(bc, 0.5, 0.4, {cols}, 1, {reps_strip}, [(0, 0)])
        out = time.time() - t0
    """,
    "ring_sweep": """
        import numpy as np
        from kpzlab import _kernels, randomness
        key = randomness.domain_key(3, "replica")
        colors = np.arange(64, dtype=np.int64)
        _kernels.ring_evolve(colors, 0.5, 1.0, key, 0, 0)
        t0 = time.time()
        colors = np.arange(64, dtype=np.int64)
        _kernels.ring_evolve(colors, 0.5, {ring_t}, key, 1, 0)
        out = time.time() - t0
    """,
}


def _run(name: str, body: str, backend: str) -> float:
    code = "import time\n" + textwrap.dedent(body) + "\nprint(out)\n"
    env = dict(os.environ, KPZLAB_BACKEND=backend)
    proc = subprocess.run([sys.executable, "-c", code], env=env,
                          capture_output=True, text=True, check=True)
    return float(proc.stdout.strip().splitlines()[-1])


def main() -> int:
    parser = argparse.ArgumentParser()
    parser.add_argument("--scale", type=float, default=1.0,
                        help="multiply workload sizes (1.0 ~ a minute)")
    parser.add_argument("--json", action="store_true")
    args = parser.parse_args()
    s = args.scale
    sizes = {
        "t": 200.0 * s, "reps": max(2, int(20 * s)),
        "t_col": 20.0 * s, "reps_col": max(2, int(10 * s)),
        "n_strip": 40, "cols": max(4, int(40 * s)),
        "reps_strip": max(10, int(400 * s)),
        "ring_t": 2000.0 * s,
    }
    rows = []
    for name, body in _WORKLOADS.items():
        filled = body.format(**sizes)
        t_numba = _run(name, filled, "numba")
        t_numpy = _run(name, filled, "numpy")
        rows.append({"workload": name, "numba_s": t_numba,
                     "numpy_s": t_numpy,
                     "speedup": t_numpy / t_numba if t_numba > 0 else 0.0})
    if args.json:
        print(json.dumps(rows, indent=2))
        return 0
    width = max(len(r["workload"]) for r in rows)
    print(f"{'workload':<{width}}  {'numba':>9}  {'numpy':>9}  {'speedup':>8}")
    for r in rows:
        print(f"{r['workload']:<{width}}  {r['numba_s']:>8.3f}s "
              f"{r['numpy_s']:>8.3f}s  {r['speedup']:>7.1f}x")
    return 0


if __name__ == "__main__":
    sys.exit(main())
