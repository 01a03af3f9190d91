"""Compare the numba and numpy product kernels on Chebyshev traces.

    python3 benchmarks/bench_kernels.py [--repeat 3] [--max-n 5]

Each case evaluates T_n at the trace of a triangular word, once per backend,
and checks that both backends produce identical elements.
"""

import argparse
import statistics
import time

from qcancel import _kernels
from qcancel.qmatrix import build_word, mat_trace, word_product
from qcancel.qscalar import CycloContext, cheb, poly_eval, valid_root_orders

WORDS = ("UULUL", "ULULUL")


def chebyshev_trace(word, n, ctx):
    tr = mat_trace(word_product(build_word(word, ctx)))
    return poly_eval(cheb(n, "first"), tr)


def time_case(word, n, ctx, name, repeat):
    samples = []
    result = None
    with _kernels.backend(name):
        for _ in range(repeat):
            start = time.perf_counter()
            result = chebyshev_trace(word, n, ctx)
            samples.append(time.perf_counter() - start)
    return statistics.median(samples), result


def main():
    parser = argparse.ArgumentParser(description=__doc__.splitlines()[0])
    parser.add_argument("--repeat", type=int, default=3)
    parser.add_argument("--max-n", type=int, default=5)
    args = parser.parse_args()

    backends = ["numpy"] + (["numba"] if _kernels.HAVE_NUMBA else [])
    _kernels.warmup()

    header = f"{'word':<8} {'n':>2} {'q':>8} {'terms':>8}" + "".join(f" {b + ' ms':>11}" for b in backends) + "  speedup"
    print(header)
    print("-" * len(header))
    for word in WORDS:
        for n in range(1, args.max_n + 1):
            for label, ctx in [("generic", None)] + [(f"m={m}", CycloContext(m)) for m in valid_root_orders(n)[-1:]]:
                timings, results = {}, []
                for b in backends:
                    timings[b], res = time_case(word, n, ctx, b, args.repeat)
                    results.append(res)
                if any(r != results[0] for r in results[1:]):
                    raise SystemExit(f"backends disagree on {word} n={n} {label}")
                row = f"{word:<8} {n:>2} {label:>8} {results[0].num_terms:>8}"
                row += "".join(f" {timings[b] * 1000:>11.2f}" for b in backends)
                if len(backends) == 2:
                    row += f"  {timings['numpy'] / timings['numba']:>6.2f}x"
                print(row)


if __name__ == "__main__":
    main()
