"""Benchmark: JIT kernels vs the pure-numpy fallback.

Runs the element classifiers and the lemma sweep over a seeded corpus with
both kernel backends and prints a timing table.  Invoke from the repo root:

    python benchmarks/bench_backends.py [--sizes 12 16 20] [--count 6]
"""

from __future__ import annotations

import argparse
import time

from lattice_forge import _kernels_numpy as np_impl
from lattice_forge import corpus

try:
    from lattice_forge import _kernels_numba as nb_impl
except ImportError:
    nb_impl = None


def classify_sweep(impl, lattices):
    for L in lattices:
        impl.neutral_median_all(L.join, L.meet)
        impl.neutral_generated_all(L.join, L.meet)
        impl.modular_all(L.join, L.meet, L.leq)
        impl.cancellable_all(L.join, L.meet)
        impl.lower_modular_all(L.join, L.meet, L.leq)


def hypothesis_sweep(impl, lattices):
    for L in lattices:
        for a in L.atoms():
            for x in range(L.n):
                impl.cancellable_over_atom_hypothesis(L.join, L.meet, x, a)


def timed(fn, *args) -> float:
    start = time.perf_counter()
    fn(*args)
    return time.perf_counter() - start


def main():
    parser = argparse.ArgumentParser(description=__doc__)
    parser.add_argument("--sizes", type=int, nargs="+", default=[12, 16, 20])
    parser.add_argument("--count", type=int, default=6, help="lattices per size")
    args = parser.parse_args()

    lattices = [
        corpus.random_lattice(size, seed)
        for size in args.sizes
        for seed in range(1, args.count + 1)
    ]
    print(f"corpus: {len(lattices)} random lattices, sizes {args.sizes}")

    rows = [("classify", classify_sweep), ("atom-hypothesis", hypothesis_sweep)]
    if nb_impl is not None:
        # trigger compilation outside the timed region
        classify_sweep(nb_impl, lattices[:1])
        hypothesis_sweep(nb_impl, lattices[:1])

    print(f"{'sweep':<16} {'numpy':>10} {'numba':>10} {'speedup':>9}")
    for name, sweep in rows:
        t_np = timed(sweep, np_impl, lattices)
        if nb_impl is None:
            print(f"{name:<16} {t_np:>9.3f}s {'n/a':>10} {'n/a':>9}")
            continue
        t_nb = timed(sweep, nb_impl, lattices)
        print(f"{name:<16} {t_np:>9.3f}s {t_nb:>9.3f}s {t_np / t_nb:>8.1f}x")


if __name__ == "__main__":
    main()
