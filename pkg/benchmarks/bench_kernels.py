"""Benchmark the compiled kernels against the pure-Python/numpy fallback.

The backend is chosen at import time by the FKIT_NUMBA environment variable,
so the fallback timing runs in a subprocess with FKIT_NUMBA=0.

Usage: python3 benchmarks/bench_kernels.py [--one]
"""

import argparse
import json
import os
import subprocess
import sys
import time

import numpy as np


def run_benchmarks():
    from fkit import composition as comp
    from fkit.kernels import PackedAlgebra, backend_name, loops

    from fkit.fields import PrimeField

    f5 = PrimeField(5)
    results = {"backend": backend_name()}
    gen = np.random.Generator(np.random.Philox(0))

    A = comp.construct("octonion-split", (), f5)
    pk = PackedAlgebra(A)
    X = gen.integers(0, 5, size=pk.jdim, dtype=np.int64)
    v = gen.integers(0, 5, size=pk.wdim, dtype=np.int64)

    # warm up (jit compilation happens here on the compiled backend)
    loops.jsharp(pk.table, pk.conj, pk.gram, X, 5)
    loops.jnorm(pk.table, pk.gram, pk.tvec, X, 5)
    loops.wq(pk.table, pk.conj, pk.gram, pk.tvec, pk.jgram, v, 5)
    loops.wrank(pk.table, pk.conj, pk.gram, pk.tvec, pk.jgram, v, 5)

    def bench(name, fn, n):
        t0 = time.perf_counter()
        for _ in range(n):
            fn()
        dt = (time.perf_counter() - t0) / n
        results[name] = dt
        return dt

    bench("jsharp_dim27", lambda: loops.jsharp(pk.table, pk.conj, pk.gram, X, 5), 2000)
    bench("jnorm_dim27", lambda: loops.jnorm(pk.table, pk.gram, pk.tvec, X, 5), 2000)
    bench("wq_dim56", lambda: loops.wq(pk.table, pk.conj, pk.gram, pk.tvec, pk.jgram, v, 5), 1000)
    bench("wrank_dim56", lambda: loops.wrank(pk.table, pk.conj, pk.gram, pk.tvec, pk.jgram, v, 5), 50)

    B = comp.construct("binarion-split", (), f5)
    pkb = PackedAlgebra(B)
    n_scan = 5**6
    loops.scan_jordan_ranks(pkb.table, pkb.conj, pkb.gram, pkb.tvec, pkb.m, 5, 0, 10)
    t0 = time.perf_counter()
    loops.scan_jordan_ranks(pkb.table, pkb.conj, pkb.gram, pkb.tvec, pkb.m, 5, 0, n_scan)
    results["scan_jordan_5^6"] = time.perf_counter() - t0
    return results


def main():
    ap = argparse.ArgumentParser()
    ap.add_argument("--one", action="store_true",
                    help="benchmark only the current backend, emit JSON")
    args = ap.parse_args()

    if args.one:
        print(json.dumps(run_benchmarks()))
        return

    here = run_benchmarks()
    env = dict(os.environ, FKIT_NUMBA="0")
    out = subprocess.run(
        [sys.executable, os.path.abspath(__file__), "--one"],
        env=env, capture_output=True, text=True, check=True,
    )
    other = json.loads(out.stdout.strip().splitlines()[-1])

    fast, slow = (here, other) if here["backend"] == "numba" else (other, here)
    print(f"{'kernel':24s} {'numba':>12s} {'fallback':>12s} {'speedup':>9s}")
    for k in fast:
        if k == "backend":
            continue
        f, s = fast[k], slow[k]
        print(f"{k:24s} {f*1e6:10.1f}us {s*1e6:10.1f}us {s/f:8.1f}x")


if __name__ == "__main__":
    main()
