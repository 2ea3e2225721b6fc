#!/usr/bin/env python3
"""Benchmark: compiled kernel vs pure-Python fallback on the table sweep.

The workload mirrors full_table: intern every facet orbit of a quotient,
then materialize every face by deleting levels support-by-support.  Run
from the repository root:

    python3 benchmarks/bench_kernel.py [--n 9]
"""

import argparse
import time

from rsl import _kernel_py
from rsl.core import enumerate_facet_orbits
from rsl.shapes import Shape

try:
    from rsl import _kernel_cy
except ImportError:
    _kernel_cy = None


def sweep(store_cls, facets, m):
    store = store_cls()
    full = (1 << m) - 1
    masks = sorted(range(1 << m), key=lambda x: -bin(x).count("1"))
    plan = []
    for mask in masks:
        if mask == full:
            continue
        missing = (~mask) & full
        bit = (missing & -missing).bit_length() - 1
        parent = mask | (1 << bit)
        depth = sum(1 for i in range(bit) if parent >> i & 1)
        plan.append((mask, parent, depth))
    t0 = time.perf_counter()
    faces = set()
    for ct in facets:
        ids = {full: store.intern_roots(ct.roots)}
        for mask, parent, depth in plan:
            ids[mask] = store.drop_roots(ids[parent], depth)
        faces.update(ids.items())
    elapsed = time.perf_counter() - t0
    return elapsed, len(faces), store.size()


def main():
    parser = argparse.ArgumentParser()
    parser.add_argument("--n", type=int, default=9)
    args = parser.parse_args()

    workloads = [
        (args.n, (args.n,)),
        (args.n - 1, (args.n - 2, 1)),
        (min(args.n - 2, 7), (1,) * min(args.n - 2, 7)),
    ]
    print(f"{'workload':<24}{'python':>10}{'cython':>10}{'speedup':>9}")
    for n, parts in workloads:
        shape = Shape(parts)
        facets = enumerate_facet_orbits(n, shape)
        m = n - 2
        t_py, faces_py, _ = sweep(_kernel_py.ForestStore, facets, m)
        label = f"n={n} shape={shape}"
        if _kernel_cy is None:
            print(f"{label:<24}{t_py:>9.3f}s{'n/a':>10}{'n/a':>9}")
            continue
        t_cy, faces_cy, _ = sweep(_kernel_cy.ForestStore, facets, m)
        assert faces_py == faces_cy, "kernels disagree on face counts"
        print(f"{label:<24}{t_py:>9.3f}s{t_cy:>9.3f}s{t_py / t_cy:>8.2f}x")
    if _kernel_cy is None:
        print("compiled kernel not built; run pip install -e . with cython available")


if __name__ == "__main__":
    main()
