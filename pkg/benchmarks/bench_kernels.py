"""Compare the compiled kernels with the pure-Python fallback.

    python3 benchmarks/bench_kernels.py [--repeat 5]

Jacobi: adjacency matrices of anti-Gallai graphs and a random symmetric
matrix. Cycle search: every pair of disjoint edges of a corpus graph on a
common 4-, 5- and 6-cycle, the sweep the SRG lemma runs.
"""
import argparse
import itertools
import time

import numpy as np

from gallaikit import anti_gallai, generate
from gallaikit.kernels import cycle_exists, implementations, jacobi_sweeps
from gallaikit.spectral import OFF_DIAGONAL_TOL, MAX_SWEEPS


def best_of(fn, repeat):
    times = []
    for _ in range(repeat):
        t0 = time.perf_counter()
        fn()
        times.append(time.perf_counter() - t0)
    return min(times)


def jacobi_cases():
    rng = np.random.default_rng(0)
    r = rng.standard_normal((60, 60))
    yield "anti_gallai(paley13) n=39", anti_gallai(generate("paley", [13])).graph.adjacency_matrix()
    yield "anti_gallai(paley17) n=68", anti_gallai(generate("paley", [17])).graph.adjacency_matrix()
    yield "random symmetric n=60", r + r.T


def cycle_case(g, impl):
    adj = g.adjacency_matrix()
    pairs = [(e, f) for e, f in itertools.combinations(g.edges, 2) if not set(e) & set(f)]

    def run():
        for e, f in pairs:
            for length in (4, 5, 6):
                cycle_exists(adj, length, e[0], e[1], required_edges=[e, f], impl=impl)
    return run, len(pairs) * 3


def main():
    ap = argparse.ArgumentParser(description=__doc__.splitlines()[0])
    ap.add_argument("--repeat", type=int, default=5)
    args = ap.parse_args()
    impls = implementations()
    if "compiled" not in impls:
        print("compiled extension not built; only the Python backend is timed")
    names = sorted(impls)
    print(f"{'case':40s}" + "".join(f"{n:>12s}" for n in names) + f"{'speedup':>10s}")

    for label, m in jacobi_cases():
        row = {}
        for name in names:
            base = np.ascontiguousarray(m, dtype=np.float64)
            row[name] = best_of(lambda: jacobi_sweeps(base.copy(), OFF_DIAGONAL_TOL, MAX_SWEEPS,
                                                      impl=impls[name]), args.repeat)
        report(f"jacobi {label}", row, names)

    for gname, params in (("petersen", []), ("rook", [3]), ("folded5cube", [])):
        g = generate(gname, params)
        row = {}
        for name in names:
            run, calls = cycle_case(g, impls[name])
            row[name] = best_of(run, args.repeat)
        report(f"cycles {gname} ({calls} searches)", row, names)


def report(label, row, names):
    cells = "".join(f"{row[n] * 1e3:10.2f}ms" for n in names)
    speed = f"{row['python'] / row['compiled']:9.1f}x" if "compiled" in row else ""
    print(f"{label:40s}{cells}{speed}")


if __name__ == "__main__":
    main()
