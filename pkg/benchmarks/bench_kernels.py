#!/usr/bin/env python3
"""Benchmark the numba kernels against the pure-numpy reference.

Runs each hot kernel on synthetic atom arrays and prints a timing table.
The same comparison can be forced at package level with PSLIMITS_NO_NUMBA=1.

Usage: python benchmarks/bench_kernels.py [--n 1000000] [--repeat 7]
"""

import argparse
import time

import numpy as np

from pslimits.kernels import _ref

try:
    from pslimits.kernels import _jit
except ImportError:
    _jit = None


def make_inputs(n, rng):
    z = np.sort(rng.normal(size=n))
    z += np.arange(n) * 1e-12
    lw = rng.normal(scale=5.0, size=n)
    lw -= _ref.logsumexp(lw)
    kt = np.sort(rng.normal(size=32))
    kv = np.cumsum(np.abs(rng.normal(size=32)))
    xs = rng.uniform(kt[0], kt[-1], size=n)
    return z, lw, kt, kv, xs


def cases(z, lw, kt, kv, xs):
    return [
        ("logsumexp", lambda impl: impl.logsumexp(lw)),
        ("normalized_log_weights", lambda impl: impl.normalized_log_weights(lw)),
        ("log_mgf_atoms", lambda impl: impl.log_mgf_atoms(z, lw, 1e-3, 0.7)),
        ("interval_logsumexp", lambda impl: impl.interval_logsumexp(z, lw, -0.5, 0.5, True)),
        ("pwl_eval", lambda impl: impl.pwl_eval(kt, kv, xs)),
        ("pwl_conj_sup", lambda impl: impl.pwl_conj_sup(kt, kv, xs)),
    ]


def best_of(fn, repeat):
    best = float("inf")
    for _ in range(repeat):
        t0 = time.perf_counter()
        fn()
        best = min(best, time.perf_counter() - t0)
    return best


def main():
    ap = argparse.ArgumentParser()
    ap.add_argument("--n", type=int, default=1_000_000)
    ap.add_argument("--repeat", type=int, default=7)
    args = ap.parse_args()

    rng = np.random.default_rng(0)
    z, lw, kt, kv, xs = make_inputs(args.n, rng)

    impls = [("numpy", _ref)]
    if _jit is not None:
        impls.append(("numba", _jit))
        for _, run in cases(z[:64], lw[:64], kt, kv, xs[:64]):
            run(_jit)  # compile outside the timed loop

    print(f"n = {args.n}, best of {args.repeat}")
    header = f"{'kernel':<24}" + "".join(f"{name:>12}" for name, _ in impls)
    if _jit is not None:
        header += f"{'speedup':>10}"
    print(header)
    for label, run in cases(z, lw, kt, kv, xs):
        times = [best_of(lambda impl=impl: run(impl), args.repeat) for _, impl in impls]
        row = f"{label:<24}" + "".join(f"{t * 1e3:>10.2f}ms" for t in times)
        if len(times) == 2 and times[1] > 0:
            row += f"{times[0] / times[1]:>9.1f}x"
        print(row)


if __name__ == "__main__":
    main()
