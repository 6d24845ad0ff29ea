"""Compare the compiled kernels against the pure-Python fallback.

    python benchmarks/bench_kernels.py [--repeat 5] [--graph-g 14] [--chow-g 16]

Reports the best wall time of each kernel under both backends and the speedup.
"""

from __future__ import annotations

import argparse
import time

from scrollinv import _backend, _kernels_py


def _best(fn, repeat: int) -> float:
    times = []
    for _ in range(repeat):
        start = time.perf_counter()
        fn()
        times.append(time.perf_counter() - start)
    return min(times)


def _product_chain(k, g: int):
    def go():
        acc = {0: 1}
        for i in range(g):
            acc = k.sqfree_mul(acc, {1 << (2 * i): 1, 1 << (2 * i + 1): 1})
        return acc

    return go


def _dense_product(k, n_terms: int, bits: int):
    a = {(i * 2654435761) % (1 << bits): i % 7 - 3 for i in range(1, n_terms)}
    b = {(i * 40503) % (1 << bits): i % 5 - 2 for i in range(1, n_terms)}
    return lambda: k.sqfree_mul(a, b)


def cases(args):
    g = args.graph_g
    n = (g + 2) << (g - 1)
    edges = _kernels_py.limit_graph_edges(g)
    return [
        (f"sqfree_mul chain H_1..H_{args.chow_g}", lambda k: _product_chain(k, args.chow_g)),
        ("sqfree_mul 2000 x 2000 terms", lambda k: _dense_product(k, 2000, 24)),
        (f"limit_graph_edges({g})", lambda k: (lambda: k.limit_graph_edges(g))),
        (f"hypercube_edges({g})", lambda k: (lambda: k.hypercube_edges(g))),
        (f"count_components({n} vertices)", lambda k: (lambda: k.count_components(n, edges))),
    ]


def main(argv=None) -> None:
    parser = argparse.ArgumentParser(description=__doc__.splitlines()[0])
    parser.add_argument("--repeat", type=int, default=5)
    parser.add_argument("--graph-g", type=int, default=14)
    parser.add_argument("--chow-g", type=int, default=16)
    args = parser.parse_args(argv)

    compiled = _backend.compiled_kernels
    if compiled is None:
        print("compiled extension not available; showing the Python backend only")
    print(f"{'kernel':40s} {'python [s]':>12s} {'compiled [s]':>13s} {'speedup':>8s}")
    for label, make in cases(args):
        t_py = _best(make(_kernels_py), args.repeat)
        if compiled is None:
            print(f"{label:40s} {t_py:12.4f} {'-':>13s} {'-':>8s}")
            continue
        t_c = _best(make(compiled), args.repeat)
        print(f"{label:40s} {t_py:12.4f} {t_c:13.4f} {t_py / t_c:7.1f}x")


if __name__ == "__main__":
    main()
