"""Time the pivot-box prefilter with the compiled and the pure-Python backend.

    python3 benchmarks/bench_scan.py [--repeat N]

Each workload is prepared once (commutant basis at full precision), then the
float64 scan alone is timed with every available backend.  Both backends must
return the same candidate set.
"""
from __future__ import annotations

import argparse
import time

import numpy as np

from modinv import builtin_e6_double, builtin_su2, commutant_basis
from modinv.invariants import scan_problem
from modinv.scan import available_backends

WORKLOADS = [
    ("e6-double, normalized", lambda: builtin_e6_double(), True, 1),
    ("e6-double, Z00 <= 3", lambda: builtin_e6_double(), False, 3),
    ("su2 k=16, Z00 <= 3", lambda: builtin_su2(16), False, 3),
    ("su2 k=28, normalized", lambda: builtin_su2(28), True, 1),
    ("su2 k=28, Z00 <= 2", lambda: builtin_su2(28), False, 2),
]


def best_of(fn, repeat):
    times = []
    for _ in range(repeat):
        t0 = time.perf_counter()
        out = fn()
        times.append(time.perf_counter() - t0)
    return min(times), out


def main() -> None:
    parser = argparse.ArgumentParser(description=__doc__.splitlines()[0])
    parser.add_argument("--repeat", type=int, default=3)
    args = parser.parse_args()
    backends = available_backends()
    if "cython" not in backends:
        print("compiled extension not built; only the Python backend is timed")
    header = f"{'workload':<24} {'box':>10} {'cands':>6}" + "".join(f" {b + ' [s]':>12}" for b in backends)
    if len(backends) > 1:
        header += f" {'speedup':>8}"
    print(header)
    for name, make, normalized, vac in WORKLOADS:
        md = make()
        problem = scan_problem(md, commutant_basis(md), normalized, vac)
        times, results = [], []
        for b in backends:
            t, out = best_of(lambda: problem.run(b), args.repeat)
            times.append(t)
            results.append({tuple(r) for r in np.asarray(out).tolist()})
        if any(r != results[0] for r in results):
            raise SystemExit(f"{name}: backends disagree")
        line = f"{name:<24} {problem.box_size:>10} {len(results[0]):>6}" + "".join(f" {t:>12.4f}" for t in times)
        if len(times) > 1:
            line += f" {times[-1] / times[0]:>7.1f}x"
        print(line)


if __name__ == "__main__":
    main()
