"""Compare the compiled and pure-Python KL kernels.

    python3 benchmarks/bench_kl.py [TYPE ...] [--repeat N] [--threads T]

Three timings per backend, best of N:
  raw    the recursion itself (int64 cube, or lists of Python ints)
  rows   raw plus conversion to the shared row format
  table  rows plus building LaurentPoly objects for every pair
Both backends and both thread counts are checked to agree.
"""

import argparse
import time

from soergelkit import _klcore_py, klkernel
from soergelkit.coxeter import build_system, coxeter_matrix
from soergelkit.hecke import build_kl_table


def best_of(repeat, fn):
    best = float("inf")
    for _ in range(repeat):
        start = time.perf_counter()
        fn()
        best = min(best, time.perf_counter() - start)
    return best


def bench(name, repeat, threads):
    W = build_system(coxeter_matrix(name))
    row = {"type": name, "size": W.size}
    results = {}
    last = [w[-1] if w else 0 for w in W.words]
    args = (W.lengths, last, W.strata(), W.max_length + 1, threads)
    raw = {"python": lambda: _klcore_py.kl_rows(W.right_mult, *args)}
    if klkernel._klcore is not None:
        raw["compiled"] = lambda: klkernel._klcore.kl_cube(W.right_mult_array(), *args)
    for backend in klkernel.available_backends():
        row[f"{backend}_raw"] = best_of(repeat, raw[backend])
        row[f"{backend}_rows"] = best_of(repeat, lambda: klkernel.kl_rows(W, threads, backend))

        def full():
            # tables are memoized per system, so time a fresh one
            build_kl_table(build_system(coxeter_matrix(name)), threads, backend)

        row[f"{backend}_table"] = best_of(repeat, full)
        results[backend] = klkernel.kl_rows(W, 1, backend)
        assert results[backend] == klkernel.kl_rows(W, max(threads, 8), backend), "thread counts disagree"
    if len(results) == 2:
        assert results["compiled"] == results["python"], "backends disagree"
    return row


def main():
    parser = argparse.ArgumentParser(description=__doc__.splitlines()[0])
    parser.add_argument("types", nargs="*", default=["A4", "B4", "D4", "H3", "F4", "A5"])
    parser.add_argument("--repeat", type=int, default=3)
    parser.add_argument("--threads", type=int, default=1)
    args = parser.parse_args()

    backends = klkernel.available_backends()
    header = f"{'type':6} {'|W|':>6}"
    for b in backends:
        header += f" {b[:3] + ' raw':>10} {b[:3] + ' rows':>10} {b[:3] + ' table':>10}"
    if len(backends) == 2:
        header += f" {'raw x':>7} {'table x':>7}"
    print(header)
    for name in args.types:
        row = bench(name, args.repeat, args.threads)
        line = f"{row['type']:6} {row['size']:>6}"
        for b in backends:
            line += "".join(f" {row[f'{b}_{k}']:>9.4f}s" for k in ("raw", "rows", "table"))
        if len(backends) == 2:
            line += f" {row['python_raw'] / row['compiled_raw']:>6.1f}x"
            line += f" {row['python_table'] / row['compiled_table']:>6.1f}x"
        print(line, flush=True)


if __name__ == "__main__":
    main()
