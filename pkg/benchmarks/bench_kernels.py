"""Time the mod-p distinct-degree factorization with and without numba.

    python3 benchmarks/bench_kernels.py [--case D6] [--count 20] [--primes 25]

Prints one line per backend; the first numba call (JIT compile or cache
load) is timed separately.
"""

import argparse
import time
from itertools import islice

from galcovers import _kernels as K
from galcovers.fieldlab import degree_patterns, specialize
from galcovers.selmer import admissible_ys, case_conditions


def polys(case, count):
    n = next(n for n in (5, 7, 11) if case_conditions(case).n_ok(n))
    return [specialize(case, y, n, checks=False).poly for y in islice(admissible_ys(case, n, start=2), count)]


def run(ps, primes, use_numba):
    t = time.perf_counter()
    calls = sum(len(degree_patterns(P, primes, use_numba=use_numba)) for P in ps)
    return time.perf_counter() - t, calls


def main():
    ap = argparse.ArgumentParser()
    ap.add_argument("--case", default="D6")
    ap.add_argument("--count", type=int, default=20)
    ap.add_argument("--primes", type=int, default=25)
    args = ap.parse_args()
    ps = polys(args.case, args.count)
    print(f"{args.case}: {len(ps)} polynomials of degree {ps[0].degree}, {args.primes} primes each")
    if K.HAVE_NUMBA:
        t0 = time.perf_counter()
        K.ddf_degrees(K.reduce_mod([1, 1, 0, 1], 7), 7, use_numba=True)
        print(f"numba warm-up      {time.perf_counter() - t0:8.3f} s")
    for name, flag in (("numpy", False), ("numba", True)):
        if flag and not K.HAVE_NUMBA:
            print("numba              not available")
            continue
        dt, calls = run(ps, args.primes, flag)
        print(f"{name:<18} {dt:8.3f} s  ({calls} factorizations, {1e3 * dt / max(calls, 1):.2f} ms each)")


if __name__ == "__main__":
    main()
