"""Micro-benchmark: compiled kernels vs the pure-Python twin.

Times the jet primitives and the Blaschke jet loop on identical random
inputs, then reports per-call latency and speedup.  Run from the repo
root after an editable install:

    python3 benchmarks/bench_kernels.py --n 200000
"""

import argparse
import math
import time

import numpy as np

from diskjet import _kernels_py as pure

try:
    from diskjet import _kernels as compiled
except ImportError:
    compiled = None


def make_inputs(n, seed=0):
    gen = np.random.default_rng(seed)

    def cplx(scale=1.0):
        return complex(gen.normal(scale=scale), gen.normal(scale=scale))

    def disk_point():
        rad = 0.9 * math.sqrt(gen.uniform())
        ang = gen.uniform(0.0, 2.0 * math.pi)
        return complex(rad * math.cos(ang), rad * math.sin(ang))

    jets = [tuple(cplx() for _ in range(4)) for _ in range(n)]
    # keep constant terms away from zero so recip is well conditioned
    jets = [(j[0] + 2.0, j[1], j[2], j[3]) for j in jets]
    points = [disk_point() for _ in range(n)]
    zeros = [tuple(disk_point() for _ in range(4)) for _ in range(n)]
    return jets, points, zeros


def bench(label, fn, args_iter):
    t0 = time.perf_counter()
    for args in args_iter:
        fn(*args)
    dt = time.perf_counter() - t0
    return dt


def main():
    ap = argparse.ArgumentParser(description=__doc__)
    ap.add_argument("--n", type=int, default=100_000, help="calls per kernel")
    ap.add_argument("--seed", type=int, default=0)
    args = ap.parse_args()

    jets, points, zeros = make_inputs(args.n, args.seed)
    cases = [
        ("jet_mul", "jet_mul", [(a, b) for a, b in zip(jets, jets[::-1])]),
        ("jet_div", "jet_div", [(a, b) for a, b in zip(jets, jets[::-1])]),
        ("jet_compose", "jet_compose", [(a, b) for a, b in zip(jets, jets[::-1])]),
        ("moebius_jet", "moebius_jet", [(0.3 + 0.2j, j) for j in jets]),
        ("blaschke_jet", "blaschke_jet",
         [(1.0, 0.0, zs, p) for zs, p in zip(zeros, points)]),
    ]

    print(f"{'kernel':<14}{'python':>12}{'cython':>12}{'speedup':>10}")
    for label, name, call_args in cases:
        t_py = bench(label, getattr(pure, name), call_args)
        if compiled is None:
            print(f"{label:<14}{1e9 * t_py / args.n:>10.0f}ns{'n/a':>12}{'n/a':>10}")
            continue
        t_cy = bench(label, getattr(compiled, name), call_args)
        print(f"{label:<14}{1e9 * t_py / args.n:>10.0f}ns"
              f"{1e9 * t_cy / args.n:>10.0f}ns{t_py / t_cy:>9.1f}x")
    if compiled is None:
        print("compiled backend unavailable; showing pure-Python timings only")


if __name__ == "__main__":
    main()
