"""Time the compiled and pure-Python kernels on the same workload.

Usage: python benchmarks/bench_kernels.py [--graphs 20] [--p 0.5] [--seed 1] [--json]

Each backend is swapped into ``chromforest.kernels`` in turn, so the whole
stack above the kernels (schemes, polymer sums, coloring order) is shared.
"""

from __future__ import annotations

import argparse
import json
import random
import statistics
import time

from chromforest import chromatic, kernels, polymer
from chromforest.errors import Limits
from chromforest.generators import random_graph
from chromforest.schemes import MinimalTreeScheme

LIMITS = Limits(coloring_budget=10**12)

WORKLOADS = {
    "classical": lambda g: chromatic.chromatic_classical(g, LIMITS),
    "whitney": lambda g: chromatic.chromatic_whitney(g, LIMITS),
    "scheme": lambda g: chromatic.chromatic_scheme(g, MinimalTreeScheme(), LIMITS),
    "polymer": lambda g: polymer.chromatic_via_polymer(g, LIMITS),
    "colorings q=0..n+1": lambda g: [chromatic.count_proper_colorings(g, q, LIMITS) for q in range(g.n + 2)],
}


def _use(module) -> None:
    for name in (
        "connected_subsets",
        "classical_coefficients",
        "signed_connected_sum",
        "connected_spanning_masks",
        "spanning_tree_masks",
        "forests",
        "minimal_tree_extension",
        "count_colorings",
    ):
        setattr(kernels, name, getattr(module, name))


def run(graphs, module, repeats: int) -> dict[str, float]:
    _use(module)
    out = {}
    for name, fn in WORKLOADS.items():
        times = []
        for _ in range(repeats):
            start = time.perf_counter()
            for g in graphs:
                fn(g)
            times.append(time.perf_counter() - start)
        out[name] = min(times)
    return out


def main(argv=None) -> None:
    ap = argparse.ArgumentParser(description=__doc__.splitlines()[0])
    ap.add_argument("--graphs", type=int, default=20)
    ap.add_argument("--nmin", type=int, default=7)
    ap.add_argument("--nmax", type=int, default=9)
    ap.add_argument("--p", type=float, default=0.5)
    ap.add_argument("--seed", type=int, default=1)
    ap.add_argument("--repeats", type=int, default=1)
    ap.add_argument("--json", action="store_true")
    args = ap.parse_args(argv)

    rng = random.Random(args.seed)
    graphs = [random_graph(rng.randint(args.nmin, args.nmax), args.p, rng) for _ in range(args.graphs)]
    backends = kernels.available_backends()
    original = backends[kernels.BACKEND]
    results = {name: run(graphs, mod, args.repeats) for name, mod in sorted(backends.items())}
    _use(original)

    if args.json:
        print(json.dumps(results, indent=2))
        return
    edges = [g.m for g in graphs]
    print(f"{len(graphs)} graphs, n in {args.nmin}..{args.nmax}, p = {args.p}, "
          f"edges median {statistics.median(edges)} max {max(edges)}")
    names = sorted(results)
    print(f"{'workload':<22}" + "".join(f"{n:>12}" for n in names) + ("     speedup" if len(names) == 2 else ""))
    for w in WORKLOADS:
        row = f"{w:<22}" + "".join(f"{results[n][w]:>11.3f}s" for n in names)
        if {"cython", "python"} <= set(names):
            row += f"{results['python'][w] / results['cython'][w]:>11.1f}x"
        print(row)


if __name__ == "__main__":
    main()
