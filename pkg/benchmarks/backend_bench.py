#!/usr/bin/env python3
"""Benchmark the compiled kernels against the pure-Python fallback.

Usage:
    python benchmarks/backend_bench.py [--quick]

Times the four kernel entry points on representative workloads and prints
one row per workload with the compiled/pure speedup.  The compiled
extension must be built (``pip install -e .``); the pure backend is
always importable.
"""

import argparse
import random
import time

import numpy as np

from twographs import _kernels_py as pure
from twographs.canon import descendant
from twographs.graphs import Graph, paley_conference_seidel

try:
    from twographs import _kernels as compiled
except ImportError:
    compiled = None


def timeit(fn, repeat=3):
    best = float("inf")
    for _ in range(repeat):
        t0 = time.perf_counter()
        fn()
        best = min(best, time.perf_counter() - t0)
    return best


def workloads(quick):
    s26 = paley_conference_seidel(25).entries.astype(float)
    rng = random.Random(11)
    small = [Graph(12, rng.getrandbits(66)) for _ in range(40)]
    card = descendant(paley_conference_seidel(25).to_graph(), 0)
    mats = []
    rs = np.random.default_rng(5)
    for _ in range(200):
        a = rs.standard_normal((26, 26))
        mats.append((a + a.T) / 2)

    sweep_m = 4 if quick else 5

    def sweep(backend):
        return lambda: backend.sweep_norms(s26, sweep_m, 1 / 25, 0.0, 1)

    def values(backend):
        return lambda: backend.sweep_values(s26, 4, 1 / 25)

    def canon_small(backend):
        def run():
            for g in small:
                backend.canonical_bytes(g.masks, g.n)

        return run

    def canon_srg(backend):
        return lambda: backend.canonical_bytes(card.masks, card.n)

    def jacobi(backend):
        def run():
            for a in mats:
                backend.jacobi_eigvals(a)

        return run

    def orbits(backend):
        return lambda: backend.orbit_reps(5 if quick else 6)

    return [
        ("subset sweep, conference-26 m=%d" % sweep_m, sweep),
        ("subset values, conference-26 m=4", values),
        ("canonical forms, 40 random 12-vertex", canon_small),
        ("canonical form, 25-vertex 12-regular", canon_srg),
        ("jacobi eigenvalues, 200 x 26x26", jacobi),
        ("labelled-graph orbits, %d vertices" % (5 if quick else 6), orbits),
    ]


def main():
    ap = argparse.ArgumentParser()
    ap.add_argument("--quick", action="store_true", help="smaller workloads")
    args = ap.parse_args()

    if compiled is None:
        raise SystemExit("compiled extension not built; run pip install -e .")

    print("%-42s %12s %12s %9s" % ("workload", "compiled", "pure", "speedup"))
    for name, make in workloads(args.quick):
        tc = timeit(make(compiled))
        tp = timeit(make(pure), repeat=1)
        print("%-42s %10.4fs %10.4fs %8.1fx" % (name, tc, tp, tp / tc))


if __name__ == "__main__":
    main()
