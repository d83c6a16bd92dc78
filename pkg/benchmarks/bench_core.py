"""Benchmark: compiled scalar core vs pure-Python fallback.

The exact Gaussian-rational arithmetic is the hot inner loop of induced
matrices, Reynolds averaging and row reduction; this script times
representative workloads under both implementations and prints the
speedup. Each measurement runs in a subprocess so the import-time core
selection works exactly as it does for users.

Usage: python benchmarks/bench_core.py [--repeat N]
"""

from __future__ import annotations

import argparse
import json
import os
import subprocess
import sys
import time


def _workloads():
    from molien import (
        EXACT,
        SquareMatrix,
        close_group,
        cross_check,
        from_permutations,
        invariant_basis,
        molien_rational,
        reynolds_matrix,
    )

    def s4():
        return close_group(from_permutations([(2, 1, 3, 4), (2, 3, 4, 1)]))

    def q8():
        return close_group(
            [
                SquareMatrix([["i", "0"], ["0", "-i"]], EXACT),
                SquareMatrix([[0, -1], [1, 0]], EXACT),
            ]
        )

    return {
        "S4 cross-check, D=6": lambda: cross_check(s4(), 6),
        "S4 invariant basis, d=7": lambda: invariant_basis(s4(), 7),
        "Q8 cross-check, D=10": lambda: cross_check(q8(), 10),
        "S4 Reynolds matrix, d=8": lambda: reynolds_matrix(s4(), 8),
        "S4 rational form": lambda: molien_rational(s4()),
    }


def run_child(name: str, repeat: int) -> None:
    workload = _workloads()[name]
    workload()  # warm-up outside the timed region
    best = min(_timed(workload) for _ in range(repeat))
    import molien

    print(json.dumps({"implementation": molien.ACTIVE_IMPLEMENTATION, "seconds": best}))


def _timed(fn) -> float:
    start = time.perf_counter()
    fn()
    return time.perf_counter() - start


def run_parent(repeat: int) -> int:
    names = list(_workloads().keys())
    results: dict[str, dict[str, float]] = {}
    implementations = {}
    for force_pure in ("0", "1"):
        env = dict(os.environ, MOLIEN_PURE_PYTHON=force_pure)
        for name in names:
            proc = subprocess.run(
                [sys.executable, __file__, "--child", name, "--repeat", str(repeat)],
                capture_output=True,
                text=True,
                env=env,
            )
            if proc.returncode != 0:
                print(proc.stderr, file=sys.stderr)
                return 1
            payload = json.loads(proc.stdout)
            implementations[force_pure] = payload["implementation"]
            results.setdefault(name, {})[force_pure] = payload["seconds"]

    fast_label = implementations["0"]
    if fast_label == "python":
        print("compiled core not available; timing the pure fallback only\n")
    width = max(len(name) for name in names)
    print(f"{'workload':<{width}}  {fast_label:>10}  {'python':>10}  {'speedup':>8}")
    for name in names:
        fast = results[name]["0"]
        pure = results[name]["1"]
        speedup = pure / fast if fast > 0 else float("inf")
        print(f"{name:<{width}}  {fast:>9.3f}s  {pure:>9.3f}s  {speedup:>7.1f}x")
    return 0


def main() -> int:
    parser = argparse.ArgumentParser(description=__doc__)
    parser.add_argument("--repeat", type=int, default=3, help="best-of repetitions")
    parser.add_argument("--child", metavar="WORKLOAD", help=argparse.SUPPRESS)
    args = parser.parse_args()
    if args.child:
        run_child(args.child, args.repeat)
        return 0
    return run_parent(args.repeat)


if __name__ == "__main__":
    sys.exit(main())
